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

#ifndef PARTGRAPH_CLIQUES_HPP_
#define PARTGRAPH_CLIQUES_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

#include "partgraph/transfer_graph.hpp"

namespace partgraph {

/// Anything answering adjacency queries over parent vertex ids.
template <class G>
concept AdjacencyOracle = requires(const G& g, Vertex u, Vertex v) {
  { g.has_edge(u, v) } -> std::convertible_to<bool>;
};

namespace detail {

template <AdjacencyOracle G>
VertexList restrict_to_neighbors(const G& g, std::span<const Vertex> candidates, Vertex v) {
  VertexList out;
  for (Vertex w : candidates) {
    if (w != v && g.has_edge(v, w)) out.push_back(w);
  }
  return out;
}

template <AdjacencyOracle G>
void grow_max_clique(const G& g, std::size_t size, const VertexList& candidates, std::size_t& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (size + (candidates.size() - i) <= best) return;
    const Vertex v = candidates[i];
    std::span<const Vertex> rest(candidates.data() + i + 1, candidates.size() - i - 1);
    grow_max_clique(g, size + 1, restrict_to_neighbors(g, rest, v), best);
  }
}

template <AdjacencyOracle G>
void bron_kerbosch(const G& g, VertexList& clique, VertexList candidates, VertexList excluded,
                   std::vector<VertexList>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      VertexList c = clique;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Tomita pivot: the vertex of candidates ∪ excluded with most candidate neighbors.
  Vertex pivot = candidates.front();
  std::size_t pivot_hits = 0;
  for (const VertexList* pool : {&candidates, &excluded}) {
    for (Vertex u : *pool) {
      std::size_t hits = 0;
      for (Vertex w : candidates) hits += (w != u && g.has_edge(u, w)) ? 1 : 0;
      if (hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    }
  }
  VertexList branch;
  for (Vertex v : candidates) {
    if (v == pivot || !g.has_edge(pivot, v)) branch.push_back(v);
  }
  for (Vertex v : branch) {
    clique.push_back(v);
    bron_kerbosch(g, clique, restrict_to_neighbors(g, candidates, v), restrict_to_neighbors(g, excluded, v), out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace detail

/// Size of a maximum clique inside `candidates` (0 for an empty set).
template <AdjacencyOracle G>
std::size_t max_clique_size(const G& g, std::span<const Vertex> candidates) {
  VertexList c(candidates.begin(), candidates.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::size_t best = 0;
  detail::grow_max_clique(g, 0, c, best);
  return best;
}

/// All maximal cliques of the subgraph induced on `candidates`, each sorted,
/// listed in lexicographic order.
template <AdjacencyOracle G>
std::vector<VertexList> maximal_cliques(const G& g, std::span<const Vertex> candidates) {
  VertexList c(candidates.begin(), candidates.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<VertexList> out;
  if (c.empty()) return out;
  VertexList clique;
  detail::bron_kerbosch(g, clique, std::move(c), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Size of the largest clique of g containing v.
inline std::size_t max_clique_size_at_vertex(const PartitionGraph& g, Vertex v) {
  return 1 + max_clique_size(g, g.neighbors(v));
}

/// Local simplex dimension: largest clique through v, minus one.
inline int local_simplex_dimension(const PartitionGraph& g, Vertex v) {
  return static_cast<int>(max_clique_size_at_vertex(g, v)) - 1;
}

inline VertexList common_neighbors(const PartitionGraph& g, Vertex u, Vertex v) {
  VertexList out;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Size of the largest clique containing the edge uv.
inline std::size_t edge_clique_number(const PartitionGraph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge_clique_number: vertices are not adjacent");
  return 2 + max_clique_size(g, common_neighbors(g, u, v));
}

/// Maximal cliques of g that contain v, each sorted, in lexicographic order.
inline std::vector<VertexList> maximal_cliques_containing(const PartitionGraph& g, Vertex v) {
  auto nb = g.neighbors(v);
  if (nb.empty()) return {VertexList{v}};
  auto local = maximal_cliques(g, nb);
  for (auto& c : local) {
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
  }
  std::sort(local.begin(), local.end());
  return local;
}

/// Degree layer D_d and simplex layer L_r of every vertex.
struct LayerAssignment {
  std::vector<int> degree_layer;
  std::vector<int> simplex_layer;
};

inline LayerAssignment compute_layers(const PartitionGraph& g) {
  LayerAssignment layers;
  layers.degree_layer.resize(g.num_vertices());
  layers.simplex_layer.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    layers.degree_layer[v] = static_cast<int>(g.degree(v));
    layers.simplex_layer[v] = local_simplex_dimension(g, v);
  }
  return layers;
}

}  // namespace partgraph

#endif  // PARTGRAPH_CLIQUES_HPP_
