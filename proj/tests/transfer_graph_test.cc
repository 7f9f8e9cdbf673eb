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

#include "partgraph/transfer_graph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "partgraph/io.hpp"
#include "partgraph/rect_ears.hpp"

namespace partgraph {
namespace {

// Position-by-position transfer oracle: every (donor index, recipient index
// or new part) choice on the raw part vector.
std::set<std::vector<int>> transfer_oracle(const Partition& p) {
  const std::vector<int> base(p.parts().begin(), p.parts().end());
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j <= base.size(); ++j) {
      if (i == j) continue;
      auto q = base;
      q[i] -= 1;
      if (j == base.size()) {
        q.push_back(1);
      } else {
        q[j] += 1;
      }
      q.erase(std::remove(q.begin(), q.end(), 0), q.end());
      std::sort(q.begin(), q.end(), std::greater<>());
      if (q != base) out.insert(q);
    }
  }
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Partition>& ps) {
  std::set<std::vector<int>> out;
  for (const auto& p : ps) out.insert({p.parts().begin(), p.parts().end()});
  return out;
}

TEST(UnitTransferNeighbors, Examples) {
  EXPECT_EQ(unit_transfer_neighbors(Partition{4, 4}), (std::vector<Partition>{{5, 3}, {4, 3, 1}}));
  EXPECT_EQ(unit_transfer_neighbors(Partition{2, 2}), (std::vector<Partition>{{3, 1}, {2, 1, 1}}));
  EXPECT_EQ(unit_transfer_neighbors(Partition{4}), (std::vector<Partition>{{3, 1}}));
}

TEST(UnitTransferNeighbors, RejectsNOne) { EXPECT_THROW(unit_transfer_neighbors(Partition{1}), std::invalid_argument); }

TEST(UnitTransferNeighbors, AgreesWithPositionOracle) {
  for (int n = 2; n <= 15; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(as_set(unit_transfer_neighbors(p)), transfer_oracle(p)) << display(p);
    }
  }
}

TEST(UnitTransferNeighbors, LongPartitionsWithFewSizes) {
  // (a^b) at large n: exactly alpha and beta.
  const auto rho = Partition::rectangle(2, 2500);
  const auto nb = unit_transfer_neighbors(rho);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(nb[0].n(), 5000);
  EXPECT_EQ(nb[1].n(), 5000);
}

TEST(BuildGraph, Examples) {
  const auto g2 = build_graph(2);
  ASSERT_EQ(g2.num_vertices(), 2u);
  EXPECT_EQ(g2.partition(0), Partition{2});
  EXPECT_EQ(g2.partition(1), (Partition{1, 1}));
  EXPECT_EQ(g2.num_edges(), 1u);

  EXPECT_EQ(build_graph(8).num_vertices(), 22u);

  const auto g12 = build_graph(12);
  EXPECT_EQ(g12.num_vertices(), 77u);
  const Vertex src[] = {0};
  const auto dist = bfs_distances(g12, src, VertexMask(g12.num_vertices(), {}));
  EXPECT_TRUE(std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreached; }));
}

TEST(BuildGraph, BoundAndOverride) {
  EXPECT_THROW(build_graph(1), std::invalid_argument);
  EXPECT_THROW(build_graph(10, {8, false}), BoundError);
  EXPECT_EQ(build_graph(10, {8, true}).num_vertices(), 42u);
}

TEST(BuildGraph, DeterministicAndSortedRows) {
  const auto a = build_graph(13);
  const auto b = build_graph(13);
  EXPECT_EQ(a.edges(), b.edges());
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    auto nb = a.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_TRUE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
  }
}

TEST(GraphProperties, SymmetryConservationNoLoops) {
  for (int n = 2; n <= 15; ++n) {
    const auto g = build_graph(n);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      EXPECT_FALSE(g.has_edge(u, u));
      for (Vertex v : g.neighbors(u)) {
        EXPECT_TRUE(g.has_edge(v, u)) << "n=" << n;
        EXPECT_EQ(g.partition(v).n(), n);
        EXPECT_TRUE(transfer_oracle(g.partition(u)).count({g.partition(v).parts().begin(), g.partition(v).parts().end()}));
      }
    }
  }
}

TEST(GraphProperties, ConjugationIsAnAutomorphism) {
  for (int n = 2; n <= 15; ++n) {
    const auto g = build_graph(n);
    std::set<std::pair<Vertex, Vertex>> image;
    for (auto [u, v] : g.edges()) {
      Vertex cu = g.index(conjugate(g.partition(u)));
      Vertex cv = g.index(conjugate(g.partition(v)));
      image.emplace(std::min(cu, cv), std::max(cu, cv));
    }
    const auto edges = g.edges();
    const std::set<std::pair<Vertex, Vertex>> original(edges.begin(), edges.end());
    EXPECT_EQ(image, original) << "n=" << n;
  }
}

TEST(GraphProperties, AntennasAndMainChainDistance) {
  for (int n = 2; n <= 15; ++n) {
    const auto g = build_graph(n);
    const Vertex top = g.index(Partition{n});
    const Vertex bottom = g.index(Partition::rectangle(1, n));
    EXPECT_EQ(g.degree(top), 1u);
    EXPECT_EQ(g.degree(bottom), 1u);
    const Vertex s[] = {top};
    const Vertex t[] = {bottom};
    EXPECT_EQ(multi_bfs(g, s, t, {}, 0).distance, ExtendedDistance(static_cast<std::uint64_t>(n - 1)));
  }
}

TEST(MultiBfs, Examples) {
  const auto g12 = build_graph(12);
  const auto forbidden = vertex_ids(g12, rect_star(12));
  const VertexList a443 = {g12.index("5,4,3"), g12.index("4,4,3,1")};
  const VertexList a3333 = {g12.index("4,3,3,2"), g12.index("3,3,3,2,1")};
  EXPECT_EQ(multi_bfs(g12, a443, a3333, forbidden).distance, ExtendedDistance(1));

  const auto g6 = build_graph(6);
  const Vertex top[] = {g6.index("6")};
  const Vertex bottom[] = {g6.index("1^6")};
  EXPECT_EQ(multi_bfs(g6, top, bottom, {}).distance, ExtendedDistance(5));

  // G_3 is the path (3)-(2,1)-(1,1,1); removing the middle vertex disconnects it.
  const auto g3 = build_graph(3);
  const Vertex s[] = {0};
  const Vertex t[] = {2};
  const Vertex cut[] = {1};
  const auto r = multi_bfs(g3, s, t, cut);
  EXPECT_FALSE(r.distance.is_finite());
  EXPECT_TRUE(r.geodesics.empty());
  EXPECT_EQ(r.distance.to_string(), "inf");
}

TEST(MultiBfs, Errors) {
  const auto g = build_graph(6);
  const Vertex a[] = {0};
  const Vertex b[] = {3};
  EXPECT_THROW(multi_bfs(g, {}, b, {}), std::invalid_argument);
  EXPECT_THROW(multi_bfs(g, a, {}, {}), std::invalid_argument);
  EXPECT_THROW(multi_bfs(g, a, b, a), std::invalid_argument);
  EXPECT_THROW(multi_bfs(g, a, b, b), std::invalid_argument);
}

// Brute-force count of shortest paths: DFS over all simple paths of length d.
std::size_t count_paths_of_length(const PartitionGraph& g, const VertexList& from, const VertexList& to,
                                  const VertexMask& blocked, std::size_t d) {
  std::size_t count = 0;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t len) {
    if (len == d) {
      count += std::binary_search(to.begin(), to.end(), v) ? 1 : 0;
      return;
    }
    on_path[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!blocked[w] && !on_path[w]) dfs(w, len + 1);
    }
    on_path[v] = false;
  };
  for (Vertex s : from) dfs(s, 0);
  return count;
}

TEST(MultiBfs, GeodesicsMatchBruteForceAndAreOrdered) {
  const auto g = build_graph(9);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.num_vertices() - 1));
  for (int trial = 0; trial < 60; ++trial) {
    VertexList s{pick(rng), pick(rng)};
    VertexList t{pick(rng)};
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (std::find(s.begin(), s.end(), t[0]) != s.end()) continue;
    const auto r = multi_bfs(g, s, t, {});
    ASSERT_TRUE(r.distance.is_finite());
    const auto d = r.distance.value();
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.geodesics.size(), count_paths_of_length(g, s, t, VertexMask(g.num_vertices(), {}), d));
    EXPECT_TRUE(std::is_sorted(r.geodesics.begin(), r.geodesics.end()));
    for (const auto& p : r.geodesics) {
      EXPECT_EQ(p.size(), d + 1);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.has_edge(p[i], p[i + 1]));
    }
    // Exchanging the roles of sources and targets keeps the distance.
    EXPECT_EQ(multi_bfs(g, t, s, {}, 0).distance, r.distance);
  }
}

TEST(MultiBfs, CapTruncatesAndFlags) {
  const auto g = build_graph(12);
  const Vertex s[] = {g.index("6,5,1")};
  const Vertex t[] = {g.index("3,2,2,2,2,1")};
  const auto forbidden = vertex_ids(g, rect_star(12));
  const auto full = multi_bfs(g, s, t, forbidden);
  ASSERT_GT(full.geodesics.size(), 3u);
  EXPECT_FALSE(full.truncated);
  const auto capped = multi_bfs(g, s, t, forbidden, 3);
  EXPECT_TRUE(capped.truncated);
  ASSERT_EQ(capped.geodesics.size(), 3u);
  EXPECT_TRUE(std::equal(capped.geodesics.begin(), capped.geodesics.end(), full.geodesics.begin()));
  const auto exact = multi_bfs(g, s, t, forbidden, full.geodesics.size());
  EXPECT_FALSE(exact.truncated);
}

TEST(MultiBfs, OverlappingSourcesAndTargetsGiveZero) {
  const auto g = build_graph(6);
  const Vertex s[] = {2, 4};
  const Vertex t[] = {4, 5};
  const auto r = multi_bfs(g, s, t, {});
  EXPECT_EQ(r.distance, ExtendedDistance(0));
  ASSERT_EQ(r.geodesics.size(), 1u);
  EXPECT_EQ(r.geodesics.front(), Path{4});
}

TEST(ConnectedComponents, EmptyAndOrdering) {
  const auto g = build_graph(8);
  EXPECT_TRUE(connected_components(g, {}).empty());
  // Two isolated vertices and an edge: the edge comes first.
  const VertexList subset{0, g.index("4,4"), g.index("5,3")};
  const auto comps = connected_components(g, subset);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 2u);
  EXPECT_EQ(comps[1], VertexList{0});
}

TEST(InducedSubgraph, Examples) {
  const auto g = build_graph(12);
  const auto e = g.edges().front();
  const VertexList pair{e.first, e.second};
  EXPECT_EQ(induced_subgraph(g, pair).num_edges(), 1u);

  const auto roots = vertex_ids(g, rect_star(12));
  const auto rect = induced_subgraph(g, roots);
  EXPECT_EQ(rect.num_vertices(), 4u);
  EXPECT_EQ(rect.num_edges(), 0u);

  const auto g9 = build_graph(9);
  const VertexList tri{g9.index("3^3"), g9.index("4,3,2"), g9.index("3,3,2,1")};
  const auto t = induced_subgraph(g9, tri);
  EXPECT_EQ(t.num_vertices(), 3u);
  EXPECT_EQ(t.num_edges(), 3u);
  EXPECT_TRUE(t.neighbors(g9.index("1^9")).empty());
}

TEST(GraphExport, JsonAndEdgeListFormats) {
  const auto g = build_graph(2);
  EXPECT_EQ(graph_to_json(g).dump(), R"({"n":2,"vertices":["2","1,1"],"edges":[[0,1]]})");
  EXPECT_EQ(graph_to_edge_list(g), "p 2 2 1\n0 1\n");

  const auto g8 = build_graph(8);
  const auto j = graph_to_json(g8);
  EXPECT_EQ(j["vertices"].size(), 22u);
  EXPECT_EQ(j["edges"].size(), g8.num_edges());
  const auto lines = graph_to_edge_list(g8);
  EXPECT_EQ(static_cast<std::size_t>(std::count(lines.begin(), lines.end(), '\n')), g8.num_edges() + 1);
}

TEST(ExtendedDistanceType, InfinityOrdersLast) {
  EXPECT_LT(ExtendedDistance(1'000'000), ExtendedDistance::infinite());
  EXPECT_LT(ExtendedDistance(0), ExtendedDistance(1));
  EXPECT_EQ(ExtendedDistance::infinite(), ExtendedDistance());
  EXPECT_THROW(ExtendedDistance::infinite().value(), std::logic_error);
}

}  // namespace
}  // namespace partgraph
