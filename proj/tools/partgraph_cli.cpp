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

// partgraph: reproduces the outer-morphology atlas of the partition graph.
//
//   partgraph ears      --n 8,9,10,12
//   partgraph corridors --n 12 --pairs all --expect corridors.json
//   partgraph zone      --n 8..12
//   partgraph divisors  --n 60,64,72,81
//   partgraph verify    --n 2..15
//   partgraph export    --n 12 --out DIR
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "partgraph/atlas.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct SharedFlags {
  std::string n;
  std::string format = "csv";
  std::string out;
  int max_n = partgraph::kDefaultFullGraphBound;
  bool force = false;
  std::size_t geodesic_cap = partgraph::kDefaultGeodesicCap;
  std::string expect;
  std::string pairs = "all";
  bool all_divisors = false;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--n", f.n, "n as an integer, a list (8,9,12) or a range (2..15)")->required();
  cmd->add_option("--format", f.format, "output format: csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));
  cmd->add_option("--out", f.out, "write output to PATH (a directory for export)");
  cmd->add_option("--max-n", f.max_n, "full-graph bound")->check(CLI::PositiveNumber);
  cmd->add_flag("--force", f.force, "allow n above the full-graph bound");
  cmd->add_option("--geodesic-cap", f.geodesic_cap, "cap on enumerated geodesics per search")
      ->check(CLI::PositiveNumber);
}

void emit(const std::string& text, const SharedFlags& f) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + f.out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  namespace atlas = partgraph::atlas;
  CLI::App app{"Outer-morphology atlas of the unit-transfer partition graph"};
  app.require_subcommand(1);
  SharedFlags f;

  auto* ears = app.add_subcommand("ears", "rectangular ears with local simplex dimensions");
  auto* corridors = app.add_subcommand("corridors", "support distances and corridors between ears");
  auto* zone = app.add_subcommand("zone", "support-zone size and connectivity");
  auto* divs = app.add_subcommand("divisors", "divisor-indexed rectangular roots (no graph build)");
  auto* verify = app.add_subcommand("verify", "machine-check the rectangular and support claims");
  auto* exp = app.add_subcommand("export", "write graph and corridor files");
  for (auto* cmd : {ears, corridors, zone, divs, verify, exp}) add_shared(cmd, f);
  corridors->add_option("--pairs", f.pairs, "'all' or 'rho/sigma;rho/sigma'");
  corridors->add_option("--expect", f.expect, "JSON file of claimed corridors to check");
  divs->add_flag("--all-divisors", f.all_divisors, "list every divisor instead of one per conjugate pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    atlas::AtlasConfig cfg;
    cfg.full_graph_bound = f.max_n;
    cfg.force = f.force;
    cfg.geodesic_cap = f.geodesic_cap;
    cfg.format = atlas::parse_format(f.format);
    const auto ns = atlas::parse_n_list(f.n);

    if (ears->parsed()) {
      emit(atlas::render(atlas::ears_table(ns, cfg), cfg.format), f);
    } else if (corridors->parsed()) {
      std::vector<atlas::CorridorExpectationSpec> expectations;
      if (!f.expect.empty()) expectations = atlas::load_expectations(f.expect);
      const auto result = atlas::corridors_table(ns, f.pairs, cfg, expectations);
      emit(atlas::render(result.table, cfg.format), f);
      return result.expectations_ok ? kExitOk : kExitFailed;
    } else if (zone->parsed()) {
      emit(atlas::render(atlas::zone_table(ns, cfg), cfg.format), f);
    } else if (divs->parsed()) {
      emit(atlas::render(atlas::divisors_table(ns, !f.all_divisors), cfg.format), f);
    } else if (verify->parsed()) {
      const auto result = atlas::verify_table(ns, cfg);
      emit(atlas::render(result.table, cfg.format), f);
      return result.all_passed ? kExitOk : kExitFailed;
    } else if (exp->parsed()) {
      const std::filesystem::path dir = f.out.empty() ? std::filesystem::path(".") : std::filesystem::path(f.out);
      std::cout << atlas::render(atlas::export_files(ns, dir, cfg), cfg.format);
    }
  } catch (const partgraph::BoundError& e) {
    std::cerr << "error: " << e.what() << " (use --max-n or --force)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}
