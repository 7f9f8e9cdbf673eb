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

#ifndef PARTGRAPH_SUPPORT_HPP_
#define PARTGRAPH_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partgraph/cliques.hpp"
#include "partgraph/rect_ears.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

using Edge = std::pair<Vertex, Vertex>;

/// Vertex ids of Rect*(n) in g, ascending.
inline VertexList rect_star_ids(const PartitionGraph& g) {
  const auto roots = rect_star(g.n());
  return vertex_ids(g, roots);
}

/// Vertex ids of A(rho), ascending.
inline VertexList attachment_ids(const PartitionGraph& g, const Partition& rho) {
  const auto ear = build_ear(rho);
  VertexList out{g.index(ear.alpha), g.index(ear.beta)};
  std::sort(out.begin(), out.end());
  return out;
}

/// Sigma_n: the subgraph induced on the union of all attachment pairs.
struct SupportZone {
  int n = 0;
  VertexList vertex_set;
  std::vector<Edge> edges;
  std::vector<VertexList> components;  // size descending, then smallest id

  std::vector<std::size_t> component_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& c : components) out.push_back(c.size());
    return out;
  }
};

inline SupportZone support_zone(const PartitionGraph& g) {
  SupportZone zone;
  zone.n = g.n();
  for (const auto& rho : rect_star(g.n())) {
    for (Vertex v : attachment_ids(g, rho)) zone.vertex_set.push_back(v);
  }
  std::sort(zone.vertex_set.begin(), zone.vertex_set.end());
  zone.vertex_set.erase(std::unique(zone.vertex_set.begin(), zone.vertex_set.end()), zone.vertex_set.end());
  zone.edges = induced_subgraph(g, zone.vertex_set).edges();
  zone.components = connected_components(g, zone.vertex_set);
  return zone;
}

namespace detail {

inline void require_root_pair(const PartitionGraph& g, const Partition& rho, const Partition& sigma) {
  if (!is_nontrivial_rectangle(rho) || !is_nontrivial_rectangle(sigma)) {
    throw std::invalid_argument("support queries need nontrivial rectangular roots");
  }
  if (rho.n() != g.n() || sigma.n() != g.n()) throw std::invalid_argument("roots do not belong to this graph");
  if (rho == sigma) throw std::invalid_argument("support queries need two distinct roots");
}

}  // namespace detail

/// d_sup: attachment-pair distance in G_n minus Rect*(n).
inline ExtendedDistance support_distance(const PartitionGraph& g, const Partition& rho, const Partition& sigma) {
  detail::require_root_pair(g, rho, sigma);
  return multi_bfs(g, attachment_ids(g, rho), attachment_ids(g, sigma), rect_star_ids(g), 0).distance;
}

enum class ProfileClass { kTetrahedral, kMixed, kMixedHigher, kEmpty };

inline std::string to_string(ProfileClass c) {
  switch (c) {
    case ProfileClass::kTetrahedral:
      return "tetrahedral";
    case ProfileClass::kMixed:
      return "mixed";
    case ProfileClass::kMixedHigher:
      return "mixed_higher";
    case ProfileClass::kEmpty:
      return "empty";
  }
  return "empty";
}

/// Zero-length corridors (shared attachment vertex) fall under kMixed.
inline ProfileClass classify_profile(const ExtendedDistance& d, std::span<const int> profile) {
  if (!d.is_finite()) return ProfileClass::kEmpty;
  if (std::any_of(profile.begin(), profile.end(), [](int k) { return k >= 5; })) return ProfileClass::kMixedHigher;
  if (!profile.empty() && std::all_of(profile.begin(), profile.end(), [](int k) { return k == 4; })) {
    return ProfileClass::kTetrahedral;
  }
  return ProfileClass::kMixed;
}

inline std::vector<int> edge_clique_profile(const PartitionGraph& g, std::span<const Vertex> path) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(static_cast<int>(edge_clique_number(g, path[i], path[i + 1])));
  }
  return out;
}

struct CorridorRecord {
  Partition rho;
  Partition sigma;
  ExtendedDistance d_sup;
  std::vector<Edge> minimizing_pairs;  // (u in A(rho), v in A(sigma)), ascending
  std::optional<Edge> chosen_endpoints;
  Path geodesic;
  std::vector<int> edge_clique_profile;
  ProfileClass profile_class = ProfileClass::kEmpty;
};

/**
 * Full corridor data for two distinct roots. The representative endpoints
 * are the least minimizing pair by vertex id; the geodesic is the
 * lexicographically least shortest path between them.
 */
inline CorridorRecord corridor_record(const PartitionGraph& g, const Partition& rho, const Partition& sigma) {
  detail::require_root_pair(g, rho, sigma);
  const auto forbidden_ids = rect_star_ids(g);
  const VertexMask forbidden(g.num_vertices(), forbidden_ids);
  const auto from = attachment_ids(g, rho);
  const auto to = attachment_ids(g, sigma);

  CorridorRecord rec{rho, sigma, {}, {}, std::nullopt, {}, {}, ProfileClass::kEmpty};
  std::uint32_t best = kUnreached;
  for (Vertex u : from) {
    const Vertex src[] = {u};
    const auto dist = bfs_distances(g, src, forbidden);
    for (Vertex v : to) {
      if (dist[v] == kUnreached || dist[v] > best) continue;
      if (dist[v] < best) {
        best = dist[v];
        rec.minimizing_pairs.clear();
      }
      rec.minimizing_pairs.emplace_back(u, v);
    }
  }
  if (best == kUnreached) return rec;

  rec.d_sup = ExtendedDistance(best);
  rec.chosen_endpoints = rec.minimizing_pairs.front();
  const Vertex s[] = {rec.chosen_endpoints->first};
  const Vertex t[] = {rec.chosen_endpoints->second};
  rec.geodesic = multi_bfs(g, s, t, forbidden_ids, 1).geodesics.front();
  rec.edge_clique_profile = edge_clique_profile(g, rec.geodesic);
  rec.profile_class = classify_profile(rec.d_sup, rec.edge_clique_profile);
  return rec;
}

/// Vertices and edges lying on some shortest path between two vertex sets.
struct GeodesicUnion {
  ExtendedDistance distance;
  VertexList vertices;
  std::vector<Edge> edges;           // (u,v) with u < v, ascending
  std::uint64_t geodesic_count = 0;  // saturates at uint64 max
};

/**
 * Union of all shortest paths from `sources` to `targets` in g minus
 * `forbidden`, computed exactly from the shortest-path DAG: a vertex lies on
 * a geodesic iff its distances to both sets sum to the set distance. No
 * enumeration takes place, so no cap applies.
 */
inline GeodesicUnion geodesic_union(const PartitionGraph& g, std::span<const Vertex> sources,
                                    std::span<const Vertex> targets, std::span<const Vertex> forbidden_ids) {
  const VertexMask forbidden(g.num_vertices(), forbidden_ids);
  const auto from = bfs_distances(g, sources, forbidden);
  const auto to = bfs_distances(g, targets, forbidden);

  GeodesicUnion out;
  std::uint32_t best = kUnreached;
  for (Vertex v : targets) best = std::min(best, from[v]);
  if (best == kUnreached) return out;
  out.distance = ExtendedDistance(best);

  auto on_dag = [&](Vertex v) { return from[v] != kUnreached && to[v] != kUnreached && from[v] + to[v] == best; };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (on_dag(v)) out.vertices.push_back(v);
  }
  // Layered path counting, source layer first.
  std::vector<std::uint64_t> paths(g.num_vertices(), 0);
  std::vector<VertexList> layers(best + 1);
  for (Vertex v : out.vertices) layers[from[v]].push_back(v);
  for (Vertex v : layers[0]) paths[v] = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint32_t k = 0; k < best; ++k) {
    for (Vertex v : layers[k]) {
      for (Vertex w : g.neighbors(v)) {
        if (on_dag(w) && from[w] == k + 1) {
          out.edges.emplace_back(std::min(v, w), std::max(v, w));
          paths[w] = paths[w] > kMax - paths[v] ? kMax : paths[w] + paths[v];
        }
      }
    }
  }
  for (Vertex v : layers[best]) {
    out.geodesic_count = out.geodesic_count > kMax - paths[v] ? kMax : out.geodesic_count + paths[v];
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

/// Corr_all: the union of all support geodesics between two ears. Empty
/// when d_sup is infinite.
struct CorridorUnion {
  Partition rho;
  Partition sigma;
  GeodesicUnion geodesics;

  const ExtendedDistance& d_sup() const { return geodesics.distance; }
  const VertexList& vertices() const { return geodesics.vertices; }
  const std::vector<Edge>& edges() const { return geodesics.edges; }
  bool empty() const { return geodesics.vertices.empty(); }
};

inline CorridorUnion corridor_union(const PartitionGraph& g, const Partition& rho, const Partition& sigma) {
  detail::require_root_pair(g, rho, sigma);
  return {rho, sigma, geodesic_union(g, attachment_ids(g, rho), attachment_ids(g, sigma), rect_star_ids(g))};
}

/// Outcome of checking a claimed corridor (endpoints and edge-clique profile).
struct CorridorExpectation {
  bool endpoints_minimizing = false;
  bool profile_realized = false;

  bool ok() const { return endpoints_minimizing && profile_realized; }
};

/**
 * Checks that (u,v) is a minimizing endpoint pair for the ears at rho and
 * sigma, and that some shortest u-v path in G_n minus Rect*(n) has exactly
 * the given edge-clique profile. The path search is pruned by the profile,
 * so it is exact and needs no enumeration cap.
 */
inline CorridorExpectation check_corridor_expectation(const PartitionGraph& g, const Partition& rho,
                                                      const Partition& sigma, const Partition& u,
                                                      const Partition& v, std::span<const int> profile) {
  CorridorExpectation out;
  const auto rec = corridor_record(g, rho, sigma);
  if (!g.contains(u) || !g.contains(v)) return out;
  const Edge pair{g.index(u), g.index(v)};
  out.endpoints_minimizing =
      std::find(rec.minimizing_pairs.begin(), rec.minimizing_pairs.end(), pair) != rec.minimizing_pairs.end();
  if (!out.endpoints_minimizing || profile.size() != rec.d_sup.value()) return out;

  const VertexMask forbidden(g.num_vertices(), rect_star_ids(g));
  const Vertex target[] = {pair.second};
  const auto to = bfs_distances(g, target, forbidden);
  std::function<bool(Vertex, std::size_t)> walk = [&](Vertex x, std::size_t step) {
    if (step == profile.size()) return x == pair.second;
    for (Vertex w : g.neighbors(x)) {
      if (forbidden[w] || to[w] == kUnreached || to[w] + 1 != to[x]) continue;
      if (static_cast<int>(edge_clique_number(g, x, w)) != profile[step]) continue;
      if (walk(w, step + 1)) return true;
    }
    return false;
  };
  out.profile_realized = walk(pair.first, 0);
  return out;
}

/// Strong rectangular contour: induced subgraph on Rect*(n) ∪ N(Rect*(n)).
inline InducedSubgraph strong_contour(const PartitionGraph& g) {
  VertexList members = rect_star_ids(g);
  const std::size_t roots = members.size();
  for (std::size_t i = 0; i < roots; ++i) {
    for (Vertex w : g.neighbors(members[i])) members.push_back(w);
  }
  return induced_subgraph(g, members);
}

/// Vertex map induced by conjugation, an automorphism of G_n.
inline VertexList conjugation_map(const PartitionGraph& g) {
  VertexList out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[v] = g.index(conjugate(g.partition(v)));
  return out;
}

/**
 * Machine check of the support-geometry claims on a built G_n: conjugation
 * of attachment pairs and support edges, symmetry and conjugation
 * invariance of d_sup, conjugation of Corr_all, geodesic validity, corridor
 * starts at genuine rear ears, and the support zone containing no root.
 */
inline PropositionReport check_support_propositions(const PartitionGraph& g,
                                                    std::size_t geodesic_cap = kDefaultGeodesicCap) {
  PropositionReport report;
  report.n = g.n();
  const auto roots = rect_star(g.n());
  const auto forbidden_ids = rect_star_ids(g);
  const VertexMask forbidden(g.num_vertices(), forbidden_ids);
  const auto conj = conjugation_map(g);
  const auto layers = compute_layers(g);

  auto map_vertices = [&](VertexList vs) {
    for (auto& v : vs) v = conj[v];
    std::sort(vs.begin(), vs.end());
    return vs;
  };

  for (const auto& rho : roots) {
    const auto a = attachment_ids(g, rho);
    const auto a_conj = attachment_ids(g, conjugate(rho));
    const auto ear = build_ear(rho);
    const auto ear_conj = build_ear(conjugate(rho));
    const bool edge_ok = g.has_edge(g.index(ear.alpha), g.index(ear.beta)) &&
                         g.has_edge(g.index(ear_conj.alpha), g.index(ear_conj.beta));
    report.add("attachment conjugation", "attachment conjugation " + display_root(rho),
               map_vertices(a) == a_conj && edge_ok);
  }

  const auto zone = support_zone(g);
  bool zone_clean = std::none_of(zone.vertex_set.begin(), zone.vertex_set.end(), [&](Vertex v) { return forbidden[v]; });
  bool support_edges_in_zone = true;
  for (const auto& rho : roots) {
    const auto a = attachment_ids(g, rho);
    if (!std::binary_search(zone.edges.begin(), zone.edges.end(), Edge{a[0], a[1]})) support_edges_in_zone = false;
  }
  report.add("support zone", "support zone", zone_clean && support_edges_in_zone && zone.vertex_set.size() <= 2 * roots.size(),
             std::to_string(zone.vertex_set.size()) + " vertices, " + std::to_string(zone.components.size()) +
                 " components");

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const auto& rho = roots[i];
      const auto& sigma = roots[j];
      const std::string label = display_root(rho) + "-" + display_root(sigma);
      const auto d = support_distance(g, rho, sigma);
      const auto d_rev = support_distance(g, sigma, rho);
      const auto d_conj = support_distance(g, conjugate(rho), conjugate(sigma));
      report.add("d_sup symmetry", "d_sup symmetry " + label, d == d_rev, d.to_string());
      report.add("d_sup conjugation", "d_sup conjugation " + label, d == d_conj,
                 d.to_string() + " vs " + d_conj.to_string());

      const auto uni = corridor_union(g, rho, sigma);
      const auto uni_conj = corridor_union(g, conjugate(rho), conjugate(sigma));
      std::vector<Edge> mapped_edges;
      for (auto [u, v] : uni.edges()) mapped_edges.emplace_back(std::min(conj[u], conj[v]), std::max(conj[u], conj[v]));
      std::sort(mapped_edges.begin(), mapped_edges.end());
      report.add("corridor-union conjugation", "corridor-union conjugation " + label,
                 map_vertices(uni.vertices()) == uni_conj.vertices() && mapped_edges == uni_conj.edges() &&
                     uni.geodesics.geodesic_count == uni_conj.geodesics.geodesic_count,
                 std::to_string(uni.vertices().size()) + " vertices, " + std::to_string(uni.geodesics.geodesic_count) +
                     " geodesics");

      const auto from = attachment_ids(g, rho);
      const auto to = attachment_ids(g, sigma);
      const auto search = multi_bfs(g, from, to, forbidden_ids, geodesic_cap);
      bool valid = d.is_finite() && !search.geodesics.empty();
      bool rear_start = true;
      for (const auto& path : search.geodesics) {
        valid = valid && path.size() == d.value() + 1 && std::binary_search(from.begin(), from.end(), path.front()) &&
                std::binary_search(to.begin(), to.end(), path.back());
        for (std::size_t k = 0; k < path.size(); ++k) {
          valid = valid && !forbidden[path[k]];
          if (k + 1 < path.size()) valid = valid && g.has_edge(path[k], path[k + 1]);
        }
        for (int c : edge_clique_profile(g, path)) valid = valid && c >= 2;
        if (build_ear(rho).ear_type == EarType::kGenuineRear) rear_start = rear_start && layers.simplex_layer[path.front()] >= 3;
        if (build_ear(sigma).ear_type == EarType::kGenuineRear) rear_start = rear_start && layers.simplex_layer[path.back()] >= 3;
      }
      report.add("geodesic validity", "geodesic validity " + label, valid,
                 std::to_string(search.geodesics.size()) + (search.truncated ? " geodesics (truncated)" : " geodesics"));
      report.add("rear corridor start", "rear corridor start " + label, rear_start);
    }
  }
  return report;
}

}  // namespace partgraph

#endif  // PARTGRAPH_SUPPORT_HPP_
