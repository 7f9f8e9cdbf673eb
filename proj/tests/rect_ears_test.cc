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

#include "partgraph/rect_ears.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "partgraph/cliques.hpp"
#include "partgraph/framework.hpp"

namespace partgraph {
namespace {

struct EarRow {
  int n;
  const char* root;
  EarType type;
  const char* alpha;
  const char* beta;
  int dim_root;
  int dim_alpha;
  int dim_beta;
};

// Reference ear data for n = 8, 9, 10, 12.
const EarRow kEarTable[] = {
    {8, "4,4", EarType::kSide, "5,3", "4,3,1", 2, 2, 3},
    {8, "2^4", EarType::kSide, "3,2,2,1", "2,2,2,1,1", 2, 3, 2},
    {9, "3^3", EarType::kGenuineRear, "4,3,2", "3,3,2,1", 2, 3, 3},
    {10, "5,5", EarType::kSide, "6,4", "5,4,1", 2, 2, 3},
    {10, "2^5", EarType::kSide, "3,2,2,2,1", "2,2,2,2,1,1", 2, 3, 2},
    {12, "6,6", EarType::kSide, "7,5", "6,5,1", 2, 2, 3},
    {12, "4^3", EarType::kGenuineRear, "5,4,3", "4,4,3,1", 2, 3, 3},
    {12, "3^4", EarType::kGenuineRear, "4,3,3,2", "3,3,3,2,1", 2, 3, 3},
    {12, "2^6", EarType::kSide, "3,2,2,2,2,1", "2,2,2,2,2,1,1", 2, 3, 2},
};

int count_divisors(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0 ? 1 : 0;
  return c;
}

TEST(RectStar, Examples) {
  EXPECT_EQ(rect_star(12), (std::vector<Partition>{{6, 6}, {4, 4, 4}, {3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}}));
  EXPECT_TRUE(rect_star(7).empty());
  EXPECT_EQ(rect_star(4), (std::vector<Partition>{{2, 2}}));
  EXPECT_THROW(rect_star(1), std::invalid_argument);
}

TEST(RectStar, SizeIsDivisorCountMinusTwo) {
  for (int n = 2; n <= 500; ++n) {
    EXPECT_EQ(static_cast<int>(rect_star(n).size()), count_divisors(n) - 2) << "n=" << n;
  }
}

TEST(RectStar, MatchesScanOfAllPartitions) {
  for (int n = 2; n <= 20; ++n) {
    std::vector<Partition> scanned;
    for (const auto& p : enumerate_partitions(n)) {
      if (is_nontrivial_rectangle(p)) scanned.push_back(p);
    }
    EXPECT_EQ(rect_star(n), scanned);
  }
}

TEST(DisplayRoot, TwoRowsPlainOtherwiseExponent) {
  EXPECT_EQ(display_root(Partition{6, 6}), "(6,6)");
  EXPECT_EQ(display_root(Partition{4, 4, 4}), "(4^3)");
  EXPECT_EQ(display_root(Partition::rectangle(2, 6)), "(2^6)");
}

TEST(BuildEar, ReferenceTable) {
  for (const auto& row : kEarTable) {
    const auto ear = build_ear(parse_partition(row.root));
    EXPECT_EQ(ear.alpha, parse_partition(row.alpha)) << row.root;
    EXPECT_EQ(ear.beta, parse_partition(row.beta)) << row.root;
    EXPECT_EQ(ear.ear_type, row.type) << row.root;
    EXPECT_TRUE(ear.local_structure_verified);

    const auto g = build_graph(row.n);
    EXPECT_EQ(local_simplex_dimension(g, g.index(ear.root)), row.dim_root) << row.root;
    EXPECT_EQ(local_simplex_dimension(g, g.index(ear.alpha)), row.dim_alpha) << row.root;
    EXPECT_EQ(local_simplex_dimension(g, g.index(ear.beta)), row.dim_beta) << row.root;
  }
}

TEST(BuildEar, NeighborsComeFromTransfers) {
  for (int n = 4; n <= 36; ++n) {
    for (const auto& rho : rect_star(n)) {
      const auto ear = build_ear(rho);
      const auto nb = unit_transfer_neighbors(rho);
      ASSERT_EQ(nb.size(), 2u) << display(rho);
      EXPECT_EQ(std::set<Partition>(nb.begin(), nb.end()), (std::set<Partition>{ear.alpha, ear.beta}));
      EXPECT_TRUE(are_adjacent(ear.alpha, ear.beta));
      EXPECT_EQ(ear.triangle().size(), 3u);
      EXPECT_EQ(ear.support_edge(), ear.attachment_pair());
      EXPECT_EQ(ear.self_conjugate, is_self_conjugate(rho));
      EXPECT_EQ(ear.ear_type == EarType::kSide, std::min(ear.a, ear.b) == 2);
    }
  }
}

TEST(BuildEar, RejectsNonRectangles) {
  EXPECT_THROW(build_ear(Partition{3, 2}), std::invalid_argument);
  EXPECT_THROW(build_ear(Partition{6}), std::invalid_argument);
  EXPECT_THROW(build_ear(Partition::rectangle(1, 6)), std::invalid_argument);
}

TEST(TetraWitness, Example) {
  const auto w = tetra_witness(Partition{4, 4, 4});
  EXPECT_EQ(w.gamma1, (Partition{5, 3, 3, 1}));
  EXPECT_EQ(w.gamma2, (Partition{5, 4, 2, 1}));
  EXPECT_TRUE(w.verified);
}

TEST(TetraWitness, BorderlineHasNoWitness) {
  EXPECT_THROW(tetra_witness(Partition{6, 6}), std::invalid_argument);
  EXPECT_THROW(tetra_witness(Partition::rectangle(2, 6)), std::invalid_argument);
  EXPECT_FALSE(build_ear(Partition{6, 6}).tetra.has_value());
}

TEST(TetraWitness, CompletesSupportEdgeToFourClique) {
  for (int n = 9; n <= 400; ++n) {
    for (const auto& rho : rect_star(n)) {
      const auto ear = build_ear(rho);
      if (std::min(ear.a, ear.b) < 3) continue;
      ASSERT_TRUE(ear.tetra.has_value());
      EXPECT_TRUE(ear.tetra->verified) << display_root(rho);
      const std::vector<Partition> four{ear.alpha, ear.beta, ear.tetra->gamma1, ear.tetra->gamma2};
      for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(four[i].n(), n);
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_TRUE(are_adjacent(four[i], four[j]));
      }
    }
  }
}

TEST(RectPropositions, AllClaimsHoldUpToTwenty) {
  for (int n = 2; n <= 20; ++n) {
    const auto report = check_rect_propositions(build_graph(n));
    EXPECT_EQ(report.n, n);
    for (const auto& c : report.claims) EXPECT_TRUE(c.passed) << "n=" << n << " " << c.claim << " " << c.detail;
  }
}

TEST(RectPropositions, ClaimInventoryAtTwelve) {
  const auto report = check_rect_propositions(build_graph(12));
  auto has = [&](const std::string& claim) {
    return std::any_of(report.claims.begin(), report.claims.end(), [&](const auto& c) { return c.claim == claim; });
  };
  EXPECT_TRUE(has("degree-2 (4^3)"));
  EXPECT_TRUE(has("tetra (3^4)"));
  EXPECT_FALSE(has("tetra (6,6)"));
  EXPECT_TRUE(has("independence"));
  EXPECT_TRUE(has("axis intersection"));
}

TEST(RectPropositions, RootsAreIndependentAndOffTheMainChain) {
  for (int n = 4; n <= 30; ++n) {
    const auto roots = rect_star(n);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_FALSE(on_main_chain(roots[i]));
      for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_FALSE(are_adjacent(roots[i], roots[j]));
    }
  }
}

}  // namespace
}  // namespace partgraph
