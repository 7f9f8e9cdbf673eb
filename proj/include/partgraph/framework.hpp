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

#ifndef PARTGRAPH_FRAMEWORK_HPP_
#define PARTGRAPH_FRAMEWORK_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "partgraph/partition.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

// Closed-form membership tests. These never need the graph.

/// p = (n-k, 1^k) for some k.
inline bool on_main_chain(const Partition& p) {
  auto parts = p.parts();
  return std::all_of(parts.begin() + 1, parts.end(), [](int v) { return v == 1; });
}

/// p = (n-k, k) with k >= 1.
inline bool on_left_edge(const Partition& p) { return p.length() == 2; }

/// p is the conjugate of a left-edge partition, i.e. its largest part is 2.
inline bool on_right_edge(const Partition& p) { return p.largest() == 2; }

inline bool in_boundary_framework(const Partition& p) {
  return on_main_chain(p) || on_left_edge(p) || on_right_edge(p);
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

/**
 * The front-and-side reference families of G_n. All sets are held in
 * canonical order; `main_chain` is held in path order (n) ... (1^n).
 */
struct FrameworkSets {
  int n = 0;
  std::vector<Partition> main_chain;
  std::vector<Partition> left_edge;
  std::vector<Partition> right_edge;
  std::vector<Partition> framework;
  std::vector<Partition> axis;
  bool main_chain_is_path = false;  // consecutive entries are adjacent
};

namespace detail {
inline void canonical_sort(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), CanonicalOrder{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}
}  // namespace detail

/// `max_n` bounds the axis scan, which enumerates every partition of n.
inline FrameworkSets framework_sets(int n, int max_n = kDefaultFullGraphBound) {
  if (n < 2) throw std::invalid_argument("framework_sets requires n >= 2");
  FrameworkSets sets;
  sets.n = n;
  for (int k = 0; k <= n - 1; ++k) {
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    sets.main_chain.emplace_back(std::move(parts));
  }
  for (int k = 1; k <= n / 2; ++k) {
    sets.left_edge.push_back(Partition{n - k, k});
    sets.right_edge.push_back(conjugate(sets.left_edge.back()));
  }
  detail::canonical_sort(sets.left_edge);
  detail::canonical_sort(sets.right_edge);

  sets.framework = sets.main_chain;
  sets.framework.insert(sets.framework.end(), sets.left_edge.begin(), sets.left_edge.end());
  sets.framework.insert(sets.framework.end(), sets.right_edge.begin(), sets.right_edge.end());
  detail::canonical_sort(sets.framework);

  for (auto& p : enumerate_partitions(n, max_n)) {
    if (is_self_conjugate(p)) sets.axis.push_back(std::move(p));
  }

  sets.main_chain_is_path = true;
  for (std::size_t i = 0; i + 1 < sets.main_chain.size(); ++i) {
    if (!are_adjacent(sets.main_chain[i], sets.main_chain[i + 1])) sets.main_chain_is_path = false;
  }
  return sets;
}

/// A connected component of G_n minus a contour, with its attachment locus.
struct AttachmentLocus {
  VertexList component;
  VertexList locus;    // contour vertices adjacent to the component
  VertexList contact;  // component vertices adjacent to the contour
};

/// Components of g minus `contour` (ordered as connected_components) and
/// their attachment loci along the contour.
inline std::vector<AttachmentLocus> attachment_locus(const PartitionGraph& g, std::span<const Vertex> contour) {
  const VertexMask on_contour(g.num_vertices(), contour);
  VertexList rest;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!on_contour[v]) rest.push_back(v);
  }
  if (contour.empty() || rest.empty()) {
    throw std::invalid_argument("attachment_locus requires a nonempty proper contour");
  }
  std::vector<AttachmentLocus> out;
  for (auto& comp : connected_components(g, rest)) {
    AttachmentLocus entry;
    for (Vertex v : comp) {
      for (Vertex w : g.neighbors(v)) {
        if (!on_contour[w]) continue;
        entry.locus.push_back(w);
        if (entry.contact.empty() || entry.contact.back() != v) entry.contact.push_back(v);
      }
    }
    std::sort(entry.locus.begin(), entry.locus.end());
    entry.locus.erase(std::unique(entry.locus.begin(), entry.locus.end()), entry.locus.end());
    entry.component = std::move(comp);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace partgraph

#endif  // PARTGRAPH_FRAMEWORK_HPP_
