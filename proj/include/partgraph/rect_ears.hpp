// Copyright 2026 The partgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARTGRAPH_RECT_EARS_HPP_
#define PARTGRAPH_RECT_EARS_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partgraph/cliques.hpp"
#include "partgraph/framework.hpp"
#include "partgraph/partition.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

/// Nontrivial rectangles (a^b), a,b >= 2, ab = n, in canonical order.
inline std::vector<Partition> rect_star(int n) {
  if (n < 2) throw std::invalid_argument("rect_star requires n >= 2");
  std::vector<Partition> out;
  for (int b = 2; b <= n / 2; ++b) {
    if (n % b == 0 && n / b >= 2) out.push_back(Partition::rectangle(n / b, b));
  }
  return out;
}

inline bool is_nontrivial_rectangle(const Partition& p) {
  auto dims = rect_dimensions(p);
  return dims && dims->width >= 2 && dims->height >= 2;
}

/// Display form for rectangular roots: "(6,6)" for two rows, "(4^3)" otherwise.
inline std::string display_root(const Partition& root) {
  return root.length() == 2 ? display(root) : display(root, PartitionStyle::kExponent);
}

enum class EarType { kSide, kGenuineRear };

inline std::string to_string(EarType t) { return t == EarType::kSide ? "side" : "genuine_rear"; }

/// gamma1, gamma2 completing the support edge to a 4-clique.
struct TetraWitness {
  Partition gamma1;
  Partition gamma2;
  bool verified = false;  // all six adjacencies checked by unit transfer
};

/**
 * The ear rooted at a nontrivial rectangle rho = (a^b): its attachment pair
 * {alpha, beta}, support edge alpha-beta and triangular closure.
 */
struct RectEar {
  Partition root;
  int a = 0;  // part size
  int b = 0;  // number of parts
  Partition alpha;
  Partition beta;
  EarType ear_type = EarType::kGenuineRear;
  bool self_conjugate = false;
  std::optional<TetraWitness> tetra;
  // neighbors(root) == {alpha, beta} and alpha ~ beta, by explicit transfers
  bool local_structure_verified = false;

  std::pair<Partition, Partition> attachment_pair() const { return {alpha, beta}; }
  std::pair<Partition, Partition> support_edge() const { return {alpha, beta}; }
  std::vector<Partition> triangle() const { return {root, alpha, beta}; }
};

namespace detail {

inline RectDimensions require_nontrivial_rectangle(const Partition& rho) {
  auto dims = rect_dimensions(rho);
  if (!dims || dims->width < 2 || dims->height < 2) {
    throw std::invalid_argument(display(rho) + " is not a nontrivial rectangular partition");
  }
  return *dims;
}

inline std::vector<int> repeated(int value, int count) {
  return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value);
}

inline Partition ear_alpha(int a, int b) {
  std::vector<int> parts{a + 1};
  auto middle = repeated(a, b - 2);
  parts.insert(parts.end(), middle.begin(), middle.end());
  parts.push_back(a - 1);
  return Partition(std::move(parts));
}

inline Partition ear_beta(int a, int b) {
  auto parts = repeated(a, b - 1);
  parts.push_back(a - 1);
  parts.push_back(1);
  return Partition(std::move(parts));
}

inline std::pair<Partition, Partition> tetra_gammas(int a, int b) {
  std::vector<int> g1{a + 1};
  auto mid1 = repeated(a, b - 3);
  g1.insert(g1.end(), mid1.begin(), mid1.end());
  g1.insert(g1.end(), {a - 1, a - 1, 1});

  std::vector<int> g2{a + 1};
  auto mid2 = repeated(a, b - 2);
  g2.insert(g2.end(), mid2.begin(), mid2.end());
  g2.insert(g2.end(), {a - 2, 1});
  return {Partition(std::move(g1)), Partition(std::move(g2))};
}

inline bool pairwise_adjacent(const std::vector<Partition>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!are_adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Throws std::invalid_argument when min(a,b) = 2: that borderline case has no witness.
inline TetraWitness tetra_witness(const Partition& rho) {
  const auto dims = detail::require_nontrivial_rectangle(rho);
  const int a = dims.width;
  const int b = dims.height;
  if (a < 3 || b < 3) {
    throw std::invalid_argument("degenerate side/borderline case, no witness for " + display_root(rho));
  }
  auto [g1, g2] = detail::tetra_gammas(a, b);
  const auto alpha = detail::ear_alpha(a, b);
  const auto beta = detail::ear_beta(a, b);
  std::vector<Partition> four{alpha, beta, g1, g2};
  auto distinct = four;
  std::sort(distinct.begin(), distinct.end());
  const bool all_distinct = std::adjacent_find(distinct.begin(), distinct.end()) == distinct.end();
  return TetraWitness{std::move(g1), std::move(g2), all_distinct && detail::pairwise_adjacent(four)};
}

/// Builds and locally verifies the ear at rho; no graph is required.
inline RectEar build_ear(const Partition& rho) {
  const auto dims = detail::require_nontrivial_rectangle(rho);
  RectEar ear{rho,
              dims.width,
              dims.height,
              detail::ear_alpha(dims.width, dims.height),
              detail::ear_beta(dims.width, dims.height),
              EarType::kGenuineRear,
              false,
              std::nullopt,
              false};
  ear.ear_type = in_boundary_framework(rho) ? EarType::kSide : EarType::kGenuineRear;
  ear.self_conjugate = dims.width == dims.height;
  if (dims.width >= 3 && dims.height >= 3) ear.tetra = tetra_witness(rho);

  auto expected = std::vector<Partition>{ear.alpha, ear.beta};
  std::sort(expected.begin(), expected.end(), CanonicalOrder{});
  ear.local_structure_verified = unit_transfer_neighbors(rho) == expected && are_adjacent(ear.alpha, ear.beta);
  return ear;
}

inline std::vector<RectEar> build_ears(int n) {
  std::vector<RectEar> out;
  for (const auto& rho : rect_star(n)) out.push_back(build_ear(rho));
  return out;
}

/// One checked claim. `family` groups claims for summary counts.
struct ClaimResult {
  std::string family;
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct PropositionReport {
  int n = 0;
  std::vector<ClaimResult> claims;

  bool all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
  }
  void add(std::string family, std::string claim, bool passed, std::string detail = {}) {
    claims.push_back({std::move(family), std::move(claim), passed, std::move(detail)});
  }
};

namespace detail {

inline std::string describe(const std::vector<Partition>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += display_root(ps[i]);
  }
  return out + "}";
}

inline std::vector<Partition> intersect(const std::vector<Partition>& rect, const std::vector<Partition>& family) {
  std::vector<Partition> out;
  for (const auto& p : rect) {
    if (std::binary_search(family.begin(), family.end(), p, CanonicalOrder{})) out.push_back(p);
  }
  return out;
}

}  // namespace detail

/**
 * Machine check of the local claims about rectangular roots on a built G_n:
 * degree 2 with neighbors {alpha, beta}, the unique triangle, independence,
 * framework and axis intersections, the layer D_2 ∩ L_2, the tetrahedral
 * witness, and simplex layer >= 3 at the support edge of genuine rear ears.
 */
inline PropositionReport check_rect_propositions(const PartitionGraph& g) {
  const int n = g.n();
  PropositionReport report;
  report.n = n;
  const auto roots = rect_star(n);

  for (const auto& rho : roots) {
    const auto ear = build_ear(rho);
    const Vertex r = g.index(rho);
    const Vertex va = g.index(ear.alpha);
    const Vertex vb = g.index(ear.beta);
    const std::string label = display_root(rho);

    VertexList expected{va, vb};
    std::sort(expected.begin(), expected.end());
    auto nb = g.neighbors(r);
    report.add("degree-2 neighbors", "degree-2 " + label,
               VertexList(nb.begin(), nb.end()) == expected && ear.local_structure_verified,
               "deg=" + std::to_string(nb.size()));

    const auto cliques = maximal_cliques_containing(g, r);
    VertexList tri{r, va, vb};
    std::sort(tri.begin(), tri.end());
    report.add("unique triangle", "unique triangle " + label, cliques.size() == 1 && cliques.front() == tri,
               std::to_string(cliques.size()) + " maximal clique(s)");

    const int dim = local_simplex_dimension(g, r);
    report.add("D2 and L2", "D2 and L2 " + label, g.degree(r) == 2 && dim == 2,
               "degree " + std::to_string(g.degree(r)) + ", dim_loc " + std::to_string(dim));

    if (ear.a >= 3 && ear.b >= 3) {
      const auto& t = *ear.tetra;
      VertexList four{va, vb, g.index(t.gamma1), g.index(t.gamma2)};
      bool clique = t.verified;
      for (std::size_t i = 0; i < four.size(); ++i) {
        for (std::size_t j = i + 1; j < four.size(); ++j) clique = clique && g.has_edge(four[i], four[j]);
      }
      report.add("tetra", "tetra " + label, clique,
                 "gamma1=" + display(t.gamma1) + " gamma2=" + display(t.gamma2));

      const int da = local_simplex_dimension(g, va);
      const int db = local_simplex_dimension(g, vb);
      report.add("rear simplex layer", "rear simplex layer " + label, da >= 3 && db >= 3,
                 "dim_loc(alpha)=" + std::to_string(da) + " dim_loc(beta)=" + std::to_string(db));
    }
  }

  bool independent = true;
  for (const auto& rho : roots) {
    for (const auto& sigma : roots) {
      if (rho != sigma && g.has_edge(g.index(rho), g.index(sigma))) independent = false;
    }
  }
  report.add("independence", "independence", independent, std::to_string(roots.size()) + " roots");

  const auto sets = framework_sets(n, std::max(n, kDefaultFullGraphBound));
  const auto on_chain = detail::intersect(roots, [&] {
    auto m = sets.main_chain;
    std::sort(m.begin(), m.end(), CanonicalOrder{});
    return m;
  }());
  report.add("main chain disjoint", "main chain disjoint", on_chain.empty(), detail::describe(on_chain));

  std::vector<Partition> want_left;
  std::vector<Partition> want_right;
  if (n % 2 == 0 && n >= 4) {
    want_left.push_back(Partition{n / 2, n / 2});
    want_right.push_back(Partition::rectangle(2, n / 2));
  }
  const auto left = detail::intersect(roots, sets.left_edge);
  const auto right = detail::intersect(roots, sets.right_edge);
  report.add("left intersection", "left intersection", left == want_left, detail::describe(left));
  report.add("right intersection", "right intersection", right == want_right, detail::describe(right));

  std::vector<Partition> want_axis;
  for (int a = 2; a * a <= n; ++a) {
    if (a * a == n) want_axis.push_back(Partition::rectangle(a, a));
  }
  const auto axis = detail::intersect(roots, sets.axis);
  report.add("axis intersection", "axis intersection", axis == want_axis, detail::describe(axis));
  return report;
}

}  // namespace partgraph

#endif  // PARTGRAPH_RECT_EARS_HPP_
