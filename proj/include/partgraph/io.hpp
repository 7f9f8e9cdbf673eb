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

#ifndef PARTGRAPH_IO_HPP_
#define PARTGRAPH_IO_HPP_

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "partgraph/support.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

using Json = nlohmann::ordered_json;

/// {n, vertices: [partition strings], edges: [[i,j], ...]} with i < j, sorted.
inline Json graph_to_json(const PartitionGraph& g) {
  Json out;
  out["n"] = g.n();
  Json vertices = Json::array();
  for (const auto& p : g.vertices()) vertices.push_back(format_partition(p));
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  return out;
}

/// Header "p <n> <|V|> <|E|>", then one "i j" line per edge (i < j, sorted).
inline std::string graph_to_edge_list(const PartitionGraph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// d_sup as an integer, or the string "inf".
inline Json distance_to_json(const ExtendedDistance& d) {
  return d.is_finite() ? Json(d.value()) : Json("inf");
}

inline Json corridor_to_json(const PartitionGraph& g, const CorridorRecord& rec) {
  auto name = [&](Vertex v) { return format_partition(g.partition(v)); };
  Json out;
  out["n"] = g.n();
  out["rho"] = format_partition(rec.rho);
  out["sigma"] = format_partition(rec.sigma);
  out["d_sup"] = distance_to_json(rec.d_sup);
  Json pairs = Json::array();
  for (auto [u, v] : rec.minimizing_pairs) pairs.push_back(Json::array({name(u), name(v)}));
  out["minimizing_pairs"] = std::move(pairs);
  out["chosen_endpoints"] =
      rec.chosen_endpoints ? Json::array({name(rec.chosen_endpoints->first), name(rec.chosen_endpoints->second)})
                           : Json(nullptr);
  Json path = Json::array();
  for (Vertex v : rec.geodesic) path.push_back(name(v));
  out["geodesic"] = std::move(path);
  out["edge_clique_profile"] = rec.edge_clique_profile;
  out["profile_class"] = to_string(rec.profile_class);
  return out;
}

}  // namespace partgraph

#endif  // PARTGRAPH_IO_HPP_
