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

#ifndef PARTGRAPH_ATLAS_HPP_
#define PARTGRAPH_ATLAS_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partgraph/cliques.hpp"
#include "partgraph/divisors.hpp"
#include "partgraph/io.hpp"
#include "partgraph/rect_ears.hpp"
#include "partgraph/support.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph::atlas {

/// Raised for malformed command arguments (exit status 2 in the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { kCsv, kJson, kMd };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  if (s == "md") return Format::kMd;
  throw UsageError("unknown format '" + std::string(s) + "' (expected csv, json or md)");
}

struct AtlasConfig {
  int full_graph_bound = kDefaultFullGraphBound;
  bool force = false;
  std::size_t geodesic_cap = kDefaultGeodesicCap;
  Format format = Format::kCsv;
  std::optional<std::filesystem::path> output_path;

  GraphOptions graph_options() const { return {full_graph_bound, force}; }
};

/**
 * Parses "12", "8,9,10,12", "2..15" or mixtures such as "2..5,8".
 * Values keep their first-seen order; duplicates are dropped.
 */
inline std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> out;
  auto number = [&](std::string_view tok) {
    tok = partgraph::detail::trim(tok);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("invalid value in --n: '" + std::string(tok) + "'");
    }
    return v;
  };
  auto push = [&](int v) {
    if (v < 2) throw UsageError("--n values must be at least 2");
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view term = text.substr(start, comma - start);
    if (auto dots = term.find(".."); dots != std::string_view::npos) {
      const int lo = number(term.substr(0, dots));
      const int hi = number(term.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range in --n: '" + std::string(term) + "'");
      for (int v = lo; v <= hi; ++v) push(v);
    } else {
      push(number(term));
    }
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("--n is empty");
  return out;
}

/// A rectangular result: named columns and JSON-valued cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

namespace detail {

inline std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += cell_text(v[i]);
    }
    return out;
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render(const Table& t, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::kCsv:
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_escape(detail::cell_text(row[i]));
        out << '\n';
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kMd:
      out << '|';
      for (const auto& c : t.columns) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& row : t.rows) {
        out << '|';
        for (const auto& cell : row) out << ' ' << detail::cell_text(cell) << " |";
        out << '\n';
      }
      break;
  }
  return out.str();
}

inline PartitionGraph checked_graph(int n, const AtlasConfig& cfg) { return build_graph(n, cfg.graph_options()); }

inline std::string ear_type_text(const RectEar& ear) {
  return ear.ear_type == EarType::kSide ? "side ear" : "genuine rear ear";
}

/// Rectangular ears with local simplex dimensions, one row per root.
inline Table ears_table(const std::vector<int>& ns, const AtlasConfig& cfg) {
  Table t{{"n", "rho", "type", "alpha", "beta", "dim_loc_rho", "dim_loc_alpha", "dim_loc_beta", "remarks"}, {}};
  for (int n : ns) {
    const auto g = checked_graph(n, cfg);
    for (const auto& ear : build_ears(n)) {
      std::string remark = ear.ear_type == EarType::kSide ? "framework" : ear.self_conjugate ? "self-conjugate" : "rear";
      t.rows.push_back({n, display_root(ear.root), ear_type_text(ear), display(ear.alpha), display(ear.beta),
                        local_simplex_dimension(g, g.index(ear.root)), local_simplex_dimension(g, g.index(ear.alpha)),
                        local_simplex_dimension(g, g.index(ear.beta)), remark});
    }
  }
  return t;
}

/// Support-zone size and component structure.
inline Table zone_table(const std::vector<int>& ns, const AtlasConfig& cfg) {
  Table t{{"n", "rect_count", "zone_vertices", "components", "component_sizes"}, {}};
  for (int n : ns) {
    const auto g = checked_graph(n, cfg);
    const auto zone = support_zone(g);
    Json sizes = Json::array();
    for (auto s : zone.component_sizes()) sizes.push_back(s);
    t.rows.push_back({n, rect_star(n).size(), zone.vertex_set.size(), zone.components.size(), sizes});
  }
  return t;
}

inline std::string divisor_type_text(const DivisorRow& row) {
  switch (row.type) {
    case DivisorRowType::kAntenna:
      return "antenna";
    case DivisorRowType::kSide:
      return "side ear";
    case DivisorRowType::kGenuineRear:
      return row.self_conjugate ? "self-conjugate rear ear" : "genuine rear ear";
  }
  return "antenna";
}

/// Divisor-indexed rectangles. No graph is built, so no bound applies.
inline Table divisors_table(const std::vector<int>& ns, bool up_to_conjugation) {
  Table t{{"n", "d", "n_over_d", "root", "type", "tetrahedral", "remarks"}, {}};
  for (int n : ns) {
    for (const auto& row : divisor_rows(n, up_to_conjugation)) {
      std::string tetra = row.type == DivisorRowType::kAntenna ? "n/a"
                          : row.tetra_verified                 ? "yes"
                                                               : "no";
      std::string remark;
      if (row.type == DivisorRowType::kAntenna) {
        remark = "antenna " + display(row.root, PartitionStyle::kExponent);
      } else if (row.type == DivisorRowType::kSide) {
        remark = "framework intersection";
      } else if (row.self_conjugate) {
        remark = "square root";
      } else {
        remark = "conjugate to " + display_root(conjugate(row.root));
      }
      t.rows.push_back({n, row.d, row.codivisor, display_root(row.root), divisor_type_text(row), tetra, remark});
    }
  }
  return t;
}

/// A claimed corridor, e.g. a reference row, checked against the graph.
struct CorridorExpectationSpec {
  int n = 0;
  Partition rho;
  Partition sigma;
  std::optional<std::uint64_t> d_sup;
  Partition from;
  Partition to;
  std::vector<int> profile;
};

/**
 * Reads a JSON array of
 * {"n", "rho", "sigma", "d_sup", "endpoints": [u, v], "profile": [...]}.
 */
inline std::vector<CorridorExpectationSpec> load_expectations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open expectation file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("invalid expectation file " + path.string() + ": " + e.what());
  }
  std::vector<CorridorExpectationSpec> out;
  try {
    for (const auto& item : doc) {
      CorridorExpectationSpec e{item.at("n").get<int>(),
                                parse_partition(item.at("rho").get<std::string>()),
                                parse_partition(item.at("sigma").get<std::string>()),
                                std::nullopt,
                                parse_partition(item.at("endpoints").at(0).get<std::string>()),
                                parse_partition(item.at("endpoints").at(1).get<std::string>()),
                                item.at("profile").get<std::vector<int>>()};
      if (item.contains("d_sup") && item["d_sup"].is_number_unsigned()) e.d_sup = item["d_sup"].get<std::uint64_t>();
      out.push_back(std::move(e));
    }
  } catch (const Json::exception& e) {
    throw UsageError("malformed expectation entry in " + path.string() + ": " + e.what());
  }
  return out;
}

/// Parses "all" or "rho/sigma;rho/sigma" into root pairs.
inline std::vector<std::pair<Partition, Partition>> parse_pairs(std::string_view text, int n) {
  const auto roots = rect_star(n);
  std::vector<std::pair<Partition, Partition>> out;
  if (partgraph::detail::trim(text) == "all") {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) out.emplace_back(roots[i], roots[j]);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    std::string_view item = text.substr(start, semi - start);
    auto slash = item.find('/');
    if (slash == std::string_view::npos) throw UsageError("pair must look like rho/sigma: '" + std::string(item) + "'");
    Partition rho = parse_partition(item.substr(0, slash));
    Partition sigma = parse_partition(item.substr(slash + 1));
    for (const auto* p : {&rho, &sigma}) {
      if (std::find(roots.begin(), roots.end(), *p) == roots.end()) {
        throw UsageError("unknown root " + display(*p) + " for n=" + std::to_string(n));
      }
    }
    if (rho == sigma) throw UsageError("pair roots must differ");
    out.emplace_back(std::move(rho), std::move(sigma));
    start = semi + 1;
  }
  return out;
}

struct CorridorsResult {
  Table table;
  bool expectations_ok = true;
};

/**
 * Corridor data per root pair. With expectations, the `expect` column
 * reports whether the claimed endpoints minimize and the claimed profile
 * is realized by some geodesic between them.
 */
inline CorridorsResult corridors_table(const std::vector<int>& ns, std::string_view pairs_text, const AtlasConfig& cfg,
                                       const std::vector<CorridorExpectationSpec>& expectations = {}) {
  CorridorsResult result;
  result.table.columns = {"n", "rho", "sigma", "d_sup", "chosen_endpoints", "corridor_length",
                          "edge_clique_profile", "profile_class", "minimizing_pairs", "expect"};
  for (int n : ns) {
    const auto g = checked_graph(n, cfg);
    for (const auto& [rho, sigma] : parse_pairs(pairs_text, n)) {
      const auto rec = corridor_record(g, rho, sigma);
      auto name = [&](Vertex v) { return display(g.partition(v)); };
      Json endpoints = rec.chosen_endpoints
                           ? Json(name(rec.chosen_endpoints->first) + "<->" + name(rec.chosen_endpoints->second))
                           : Json("");
      Json pairs = Json::array();
      for (auto [u, v] : rec.minimizing_pairs) pairs.push_back(name(u) + "<->" + name(v));
      Json length = rec.d_sup.is_finite() ? Json(rec.geodesic.size() - 1) : Json("inf");

      std::string expect;
      for (const auto& e : expectations) {
        bool same = e.n == n && ((e.rho == rho && e.sigma == sigma) || (e.rho == sigma && e.sigma == rho));
        if (!same) continue;
        // Orient the claimed endpoints as (A(rho), A(sigma)).
        const bool flipped = e.rho != rho;
        const auto& u = flipped ? e.to : e.from;
        const auto& v = flipped ? e.from : e.to;
        std::vector<int> profile = e.profile;
        if (flipped) std::reverse(profile.begin(), profile.end());
        const auto check = check_corridor_expectation(g, rho, sigma, u, v, profile);
        const bool d_ok = !e.d_sup || (rec.d_sup.is_finite() && rec.d_sup.value() == *e.d_sup);
        if (check.ok() && d_ok) {
          expect = "ok";
        } else {
          expect = std::string("FAIL:") + (d_ok ? "" : " d_sup") + (check.endpoints_minimizing ? "" : " endpoints") +
                   (check.profile_realized ? "" : " profile");
          result.expectations_ok = false;
        }
      }
      result.table.rows.push_back({n, display_root(rho), display_root(sigma), distance_to_json(rec.d_sup), endpoints,
                                   length, rec.edge_clique_profile, to_string(rec.profile_class), pairs, expect});
    }
  }
  return result;
}

struct VerifyResult {
  Table table;
  bool all_passed = true;
};

/// Runs the rectangular and support-geometry checks for each n, then
/// appends one summary row per claim family (n = "all").
inline VerifyResult verify_table(const std::vector<int>& ns, const AtlasConfig& cfg) {
  VerifyResult result;
  result.table.columns = {"n", "claim", "status", "detail"};
  std::vector<std::string> family_order;
  std::map<std::string, std::pair<int, int>> tally;  // family -> (passed, total)
  for (int n : ns) {
    const auto g = checked_graph(n, cfg);
    for (const auto& report : {check_rect_propositions(g), check_support_propositions(g, cfg.geodesic_cap)}) {
      for (const auto& c : report.claims) {
        result.table.rows.push_back({n, c.claim, c.passed ? "pass" : "FAIL", c.detail});
        if (!tally.count(c.family)) family_order.push_back(c.family);
        auto& [passed, total] = tally[c.family];
        passed += c.passed ? 1 : 0;
        ++total;
        result.all_passed = result.all_passed && c.passed;
      }
    }
  }
  for (const auto& family : family_order) {
    auto [passed, total] = tally[family];
    result.table.rows.push_back({"all", family, passed == total ? "pass" : "FAIL",
                                 std::to_string(passed) + "/" + std::to_string(total)});
  }
  return result;
}

/// Writes G<n>.json, G<n>.edges and corridors<n>.json into `dir`; returns
/// a table of the files written.
inline Table export_files(const std::vector<int>& ns, const std::filesystem::path& dir, const AtlasConfig& cfg) {
  Table t{{"n", "file", "kind", "count"}, {}};
  std::filesystem::create_directories(dir);
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + p.string());
  };
  for (int n : ns) {
    const auto g = checked_graph(n, cfg);
    const std::string stem = std::to_string(n);
    write(dir / ("G" + stem + ".json"), graph_to_json(g).dump() + "\n");
    t.rows.push_back({n, "G" + stem + ".json", "graph_json", g.num_vertices()});
    write(dir / ("G" + stem + ".edges"), graph_to_edge_list(g));
    t.rows.push_back({n, "G" + stem + ".edges", "edge_list", g.num_edges()});

    Json records = Json::array();
    const auto roots = rect_star(n);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        records.push_back(corridor_to_json(g, corridor_record(g, roots[i], roots[j])));
      }
    }
    const auto count = records.size();
    write(dir / ("corridors" + stem + ".json"), records.dump(2) + "\n");
    t.rows.push_back({n, "corridors" + stem + ".json", "corridor_records", count});
  }
  return t;
}

}  // namespace partgraph::atlas

#endif  // PARTGRAPH_ATLAS_HPP_
