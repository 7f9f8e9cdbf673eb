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

#ifndef PARTGRAPH_DIVISORS_HPP_
#define PARTGRAPH_DIVISORS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partgraph/partition.hpp"
#include "partgraph/rect_ears.hpp"
#include "partgraph/transfer_graph.hpp"

// Large-n local layer: everything here works from explicit partitions and
// unit-transfer checks, never from a built G_n.

namespace partgraph {

enum class DivisorRowType { kAntenna, kSide, kGenuineRear };

inline std::string to_string(DivisorRowType t) {
  switch (t) {
    case DivisorRowType::kAntenna:
      return "antenna";
    case DivisorRowType::kSide:
      return "side";
    case DivisorRowType::kGenuineRear:
      return "genuine_rear";
  }
  return "antenna";
}

/// The rectangle ((n/d)^d) indexed by a divisor d of n.
struct DivisorRow {
  int n = 0;
  int d = 0;
  int codivisor = 0;  // n/d, also the divisor of the conjugate row
  Partition root;
  DivisorRowType type = DivisorRowType::kAntenna;
  bool self_conjugate = false;
  bool tetra_verified = false;
  std::optional<RectEar> ear;  // absent for antennas
};

inline std::vector<int> divisors(int n) {
  std::vector<int> small;
  std::vector<int> large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// One row per divisor (ascending), or per conjugate pair {d, n/d} keeping
/// d <= n/d when `up_to_conjugation` is set.
inline std::vector<DivisorRow> divisor_rows(int n, bool up_to_conjugation) {
  if (n < 2) throw std::invalid_argument("divisor_rows requires n >= 2");
  std::vector<DivisorRow> rows;
  for (int d : divisors(n)) {
    const int q = n / d;
    if (up_to_conjugation && d > q) continue;
    DivisorRow row{n, d, q, Partition::rectangle(q, d), {}, false, false, std::nullopt};
    row.self_conjugate = d == q;
    if (d != 1 && d != n) {
      auto ear = build_ear(row.root);
      row.type = ear.ear_type == EarType::kSide ? DivisorRowType::kSide : DivisorRowType::kGenuineRear;
      row.tetra_verified = ear.tetra.has_value() && ear.tetra->verified && ear.local_structure_verified;
      row.ear = std::move(ear);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Locally verified ear data for a nontrivial rectangle of any size.
struct LocalEarReport {
  RectEar ear;
  bool degree_two = false;     // rho has exactly the neighbors alpha, beta
  bool triangle = false;       // alpha ~ beta
  bool tetra_verified = false; // only meaningful when ear.tetra is present
};

inline LocalEarReport local_ear_report(const Partition& rho) {
  if (!is_nontrivial_rectangle(rho)) {
    throw std::invalid_argument(display(rho) + " is not a nontrivial rectangular partition");
  }
  LocalEarReport report{build_ear(rho), false, false, false};
  const auto nb = unit_transfer_neighbors(rho);
  report.degree_two = nb.size() == 2 &&
                      ((nb[0] == report.ear.alpha && nb[1] == report.ear.beta) ||
                       (nb[0] == report.ear.beta && nb[1] == report.ear.alpha));
  report.triangle = are_adjacent(report.ear.alpha, report.ear.beta);
  report.tetra_verified = report.ear.tetra.has_value() && report.ear.tetra->verified;
  return report;
}

}  // namespace partgraph

#endif  // PARTGRAPH_DIVISORS_HPP_
