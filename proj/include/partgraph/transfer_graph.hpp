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

#ifndef PARTGRAPH_TRANSFER_GRAPH_HPP_
#define PARTGRAPH_TRANSFER_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using Path = std::vector<Vertex>;

/**
 * All partitions reachable from `p` by one elementary unit transfer:
 * decrement a donor part (dropping it at zero), then increment another part
 * or append a new part 1. Results are canonical, deduplicated, exclude `p`,
 * and are returned in canonical order.
 *
 * Work is proportional to (distinct part sizes)^2 * length, so very long
 * partitions with few distinct sizes are cheap.
 */
inline std::vector<Partition> unit_transfer_neighbors(const Partition& p) {
  if (p.n() < 2) throw std::invalid_argument("unit transfers need n >= 2");
  const auto base = runs(p);
  std::vector<Partition> out;

  auto emit = [&](std::size_t donor, int recipient_value, std::size_t recipient) {
    const int dv = base[donor].first;
    // Moving a unit from dv to dv-1 is the identity after reordering.
    if (recipient_value == dv - 1) return;
    std::map<int, int, std::greater<>> counts(base.begin(), base.end());
    auto dec = [&](int v) {
      if (--counts[v] == 0) counts.erase(v);
    };
    dec(dv);
    if (dv - 1 > 0) ++counts[dv - 1];
    if (recipient != base.size()) dec(recipient_value);
    ++counts[recipient_value + 1];
    std::vector<int> parts;
    parts.reserve(p.length() + 1);
    for (auto [v, m] : counts) parts.insert(parts.end(), static_cast<std::size_t>(m), v);
    out.emplace_back(std::move(parts));
  };

  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j && base[i].second < 2) continue;
      emit(i, base[j].first, j);
    }
    emit(i, 0, base.size());
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// True iff q is one unit transfer away from p.
inline bool are_adjacent(const Partition& p, const Partition& q) {
  if (p.n() != q.n() || p == q || p.n() < 2) return false;
  const auto nb = unit_transfer_neighbors(p);
  return std::binary_search(nb.begin(), nb.end(), q, CanonicalOrder{});
}

/// Natural number or INFINITE; INFINITE compares greater than any value.
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() = default;  // infinite
  constexpr explicit ExtendedDistance(std::uint64_t value) : value_(value) {}
  static constexpr ExtendedDistance infinite() { return {}; }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr std::uint64_t value() const {
    if (!is_finite()) throw std::logic_error("infinite distance has no value");
    return value_;
  }
  std::string to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

  friend constexpr auto operator<=>(const ExtendedDistance&, const ExtendedDistance&) = default;

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = kInf;
};

struct GraphOptions {
  int max_n = kDefaultFullGraphBound;
  bool force = false;  // permit n above max_n
};

/**
 * G_n: vertices are the partitions of n in canonical order, edges join
 * partitions one unit transfer apart. Adjacency is stored in compressed
 * rows with each row sorted by vertex id. Immutable once built.
 */
class PartitionGraph {
 public:
  PartitionGraph(int n, std::vector<Partition> vertices, std::vector<std::size_t> offsets, VertexList targets)
      : n_(n), vertices_(std::move(vertices)), offsets_(std::move(offsets)), targets_(std::move(targets)) {}

  int n() const { return n_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return targets_.size() / 2; }
  const std::vector<Partition>& vertices() const { return vertices_; }
  const Partition& partition(Vertex v) const { return vertices_.at(v); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool contains(const Partition& p) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), p, CanonicalOrder{});
  }
  /// Vertex id of `p`; throws std::out_of_range when p is not a vertex.
  Vertex index(const Partition& p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p, CanonicalOrder{});
    if (it == vertices_.end() || *it != p) {
      throw std::out_of_range("partition " + display(p) + " is not a vertex of G_" + std::to_string(n_));
    }
    return static_cast<Vertex>(it - vertices_.begin());
  }
  Vertex index(std::string_view text) const { return index(parse_partition(text)); }

  /// Edges (u,v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<Partition> vertices_;
  std::vector<std::size_t> offsets_;
  VertexList targets_;
};

inline PartitionGraph build_graph(int n, const GraphOptions& options = {}) {
  if (n < 2) throw std::invalid_argument("G_n is built only for n >= 2");
  if (n > options.max_n && !options.force) {
    throw BoundError("n=" + std::to_string(n) + " exceeds the full-graph bound " + std::to_string(options.max_n) +
                     " (override required)");
  }
  auto vertices = enumerate_partitions(n, std::numeric_limits<int>::max());
  std::vector<std::size_t> offsets{0};
  VertexList targets;
  offsets.reserve(vertices.size() + 1);
  for (const auto& p : vertices) {
    const auto first = targets.size();
    for (const auto& q : unit_transfer_neighbors(p)) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), q, CanonicalOrder{});
      targets.push_back(static_cast<Vertex>(it - vertices.begin()));
    }
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(first), targets.end());
    offsets.push_back(targets.size());
  }
  return PartitionGraph(n, std::move(vertices), std::move(offsets), std::move(targets));
}

/// Membership mask over the vertices of a graph.
class VertexMask {
 public:
  VertexMask(std::size_t size, std::span<const Vertex> members) : bits_(size, false) {
    for (Vertex v : members) bits_.at(v) = true;
  }
  bool operator[](Vertex v) const { return bits_[v]; }
  std::size_t size() const { return bits_.size(); }

 private:
  std::vector<bool> bits_;
};

/**
 * Read-only view of the subgraph induced on a vertex subset. Vertex ids are
 * those of the parent graph.
 */
class InducedSubgraph {
 public:
  InducedSubgraph(const PartitionGraph& g, std::span<const Vertex> subset)
      : graph_(&g), members_(subset.begin(), subset.end()), mask_(g.num_vertices(), subset) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const PartitionGraph& parent() const { return *graph_; }
  const VertexList& vertices() const { return members_; }
  std::size_t num_vertices() const { return members_.size(); }
  bool contains(Vertex v) const { return v < mask_.size() && mask_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return contains(u) && contains(v) && graph_->has_edge(u, v); }

  VertexList neighbors(Vertex v) const {
    VertexList out;
    if (!contains(v)) return out;
    for (Vertex w : graph_->neighbors(v)) {
      if (mask_[w]) out.push_back(w);
    }
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u : members_) {
      for (Vertex v : graph_->neighbors(u)) {
        if (u < v && mask_[v]) out.emplace_back(u, v);
      }
    }
    return out;
  }
  std::size_t num_edges() const { return edges().size(); }

 private:
  const PartitionGraph* graph_;
  VertexList members_;
  VertexMask mask_;
};

inline InducedSubgraph induced_subgraph(const PartitionGraph& g, std::span<const Vertex> subset) {
  return InducedSubgraph(g, subset);
}

/// BFS distances from a vertex set, skipping forbidden vertices.
/// Unreached vertices carry kUnreached.
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::uint32_t> bfs_distances(const PartitionGraph& g, std::span<const Vertex> sources,
                                                const VertexMask& forbidden) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreached);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!forbidden[s] && dist[s] == kUnreached) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (forbidden[w] || dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

inline constexpr std::size_t kDefaultGeodesicCap = 10'000;

struct GeodesicSearch {
  ExtendedDistance distance;
  std::vector<Path> geodesics;  // lexicographic by vertex-id sequence
  bool truncated = false;       // the cap stopped enumeration early
};

/**
 * Shortest source-to-target distance in g minus `forbidden`, together with
 * up to `cap` shortest paths. Paths are enumerated in lexicographic order of
 * their vertex-id sequences. A cap of 0 computes the distance only.
 */
inline GeodesicSearch multi_bfs(const PartitionGraph& g, std::span<const Vertex> sources,
                                std::span<const Vertex> targets, std::span<const Vertex> forbidden,
                                std::size_t cap = kDefaultGeodesicCap) {
  if (sources.empty() || targets.empty()) throw std::invalid_argument("sources and targets must be nonempty");
  const VertexMask blocked(g.num_vertices(), forbidden);
  for (Vertex v : sources) {
    if (blocked[v]) throw std::invalid_argument("a source vertex is forbidden");
  }
  for (Vertex v : targets) {
    if (blocked[v]) throw std::invalid_argument("a target vertex is forbidden");
  }

  const auto from_src = bfs_distances(g, sources, blocked);
  std::uint32_t best = kUnreached;
  for (Vertex t : targets) best = std::min(best, from_src[t]);

  GeodesicSearch result;
  if (best == kUnreached) return result;
  result.distance = ExtendedDistance(best);
  if (cap == 0) return result;

  // A vertex lies on a geodesic iff its source and target distances sum to best.
  const auto to_tgt = bfs_distances(g, targets, blocked);
  VertexList sorted_sources(sources.begin(), sources.end());
  std::sort(sorted_sources.begin(), sorted_sources.end());
  sorted_sources.erase(std::unique(sorted_sources.begin(), sorted_sources.end()), sorted_sources.end());

  // Enumerate cap+1 paths so that hitting the cap is detectable.
  Path path;
  bool done = false;
  std::function<void(Vertex)> extend = [&](Vertex v) {
    path.push_back(v);
    if (path.size() == best + 1) {
      result.geodesics.push_back(path);
      done = result.geodesics.size() > cap;
    } else {
      for (Vertex w : g.neighbors(v)) {
        if (to_tgt[w] != kUnreached && to_tgt[w] + 1 == to_tgt[v] && from_src[w] == from_src[v] + 1) {
          extend(w);
          if (done) break;
        }
      }
    }
    path.pop_back();
  };
  for (Vertex s : sorted_sources) {
    if (from_src[s] == 0 && to_tgt[s] == best) extend(s);
    if (done) break;
  }
  if (result.geodesics.size() > cap) {
    result.geodesics.pop_back();
    result.truncated = true;
  }
  return result;
}

/**
 * Connected components of the subgraph induced on `subset`, ordered by size
 * (descending) and then by smallest vertex id. Each component is sorted.
 */
inline std::vector<VertexList> connected_components(const PartitionGraph& g, std::span<const Vertex> subset) {
  const VertexMask member(g.num_vertices(), subset);
  std::vector<bool> seen(g.num_vertices(), false);
  VertexList order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  std::vector<VertexList> comps;
  for (Vertex root : order) {
    if (seen[root]) continue;
    VertexList comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (member[w] && !seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexList& a, const VertexList& b) { return a.size() > b.size(); });
  return comps;
}

/// All vertex ids of g, ascending.
inline VertexList all_vertices(const PartitionGraph& g) {
  VertexList out(g.num_vertices());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

/// Vertex ids of the given partitions, sorted ascending.
inline VertexList vertex_ids(const PartitionGraph& g, std::span<const Partition> parts) {
  VertexList out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(g.index(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace partgraph

#endif  // PARTGRAPH_TRANSFER_GRAPH_HPP_
