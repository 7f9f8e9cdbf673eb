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

#ifndef PARTGRAPH_PARTITION_HPP_
#define PARTGRAPH_PARTITION_HPP_

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partgraph {

/// Raised for malformed partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested n exceeds the configured full-graph bound.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kDefaultFullGraphBound = 40;

/**
 * An integer partition in canonical form: a nonempty, weakly decreasing
 * sequence of positive parts. The sum is cached.
 *
 * The default three-way comparison is lexicographic on the part sequence.
 * Vertex lists use the reverse of that order (see CanonicalOrder), so the
 * one-part partition (n) comes first and (1^n) comes last.
 */
class Partition {
 public:
  /// Sorts and validates `parts`; throws std::invalid_argument on an empty
  /// sequence or a non-positive part.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (parts_.back() < 1) throw std::invalid_argument("partition parts must be positive");
    for (int p : parts_) n_ += p;
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (value^count); requires value, count >= 1.
  static Partition rectangle(int value, int count) {
    if (value < 1 || count < 1) throw std::invalid_argument("rectangle dimensions must be positive");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
  }

  int n() const { return n_; }
  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int largest() const { return parts_.front(); }
  int smallest() const { return parts_.back(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Strict weak order placing partitions in canonical vertex order
/// (reverse-lexicographic, largest first).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Run-length view of a partition: (value, multiplicity), values descending.
inline std::vector<std::pair<int, int>> runs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int v : p.parts()) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline long long parse_integer(std::string_view token, std::string_view whole) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty number in partition \"" + std::string(whole) + "\"");
  bool negative = false;
  if (token.front() == '-' || token.front() == '+') {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("invalid number in partition \"" + std::string(whole) + "\"");
  }
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || value > 1'000'000'000) {
    throw ParseError("number out of range in partition \"" + std::string(whole) + "\"");
  }
  return negative ? -value : value;
}

}  // namespace detail

/**
 * Parses partition text: comma-separated terms, each either an integer or
 * `base^exponent`. Surrounding parentheses are accepted, as is whitespace
 * around tokens. Terms may appear in any order; the result is canonical.
 */
inline Partition parse_partition(std::string_view text) {
  const std::string_view whole = text;
  text = detail::trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in \"" + std::string(whole) + "\"");
    text = detail::trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw ParseError("empty partition text");

  std::vector<int> parts;
  long long total = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view term = text.substr(start, comma - start);
    long long base = 0;
    long long exponent = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      base = detail::parse_integer(term.substr(0, caret), whole);
      exponent = detail::parse_integer(term.substr(caret + 1), whole);
    } else {
      base = detail::parse_integer(term, whole);
    }
    if (base < 1) throw ParseError("parts must be positive in \"" + std::string(whole) + "\"");
    if (exponent < 1) throw ParseError("exponent must be positive in \"" + std::string(whole) + "\"");
    total += base * exponent;
    if (total > 1'000'000'000) throw ParseError("partition too large: \"" + std::string(whole) + "\"");
    parts.insert(parts.end(), static_cast<std::size_t>(exponent), static_cast<int>(base));
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

enum class PartitionStyle { kPlain, kExponent };

/// Plain: "4,3,3,2". Exponent: runs compressed, "4,3^2,2". No parentheses.
inline std::string format_partition(const Partition& p, PartitionStyle style = PartitionStyle::kPlain) {
  std::ostringstream out;
  bool first = true;
  if (style == PartitionStyle::kPlain) {
    for (int v : p.parts()) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
    return out.str();
  }
  for (auto [value, count] : runs(p)) {
    if (!first) out << ',';
    out << value;
    if (count > 1) out << '^' << count;
    first = false;
  }
  return out.str();
}

/// Parenthesized display form used in reports, e.g. "(5,4,3)" or "(4^3)".
inline std::string display(const Partition& p, PartitionStyle style = PartitionStyle::kPlain) {
  return "(" + format_partition(p, style) + ")";
}

/**
 * All partitions of n in canonical order ((n) first, (1^n) last).
 * Throws std::invalid_argument for n < 1 and BoundError for n > max_n.
 */
inline std::vector<Partition> enumerate_partitions(int n, int max_n = kDefaultFullGraphBound) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > max_n) {
    throw BoundError("n=" + std::to_string(n) + " exceeds the configured bound " + std::to_string(max_n));
  }
  std::vector<Partition> out;
  // Successor rule for reverse-lexicographic order: strip trailing ones,
  // decrement the last part k > 1, and refill greedily with parts <= k-1.
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    int k = cur.back() - 1;
    cur.back() = k;
    int rem = ones + 1;
    while (rem > 0) {
      int take = std::min(k, rem);
      cur.push_back(take);
      rem -= take;
    }
  }
  return out;
}

/// Transpose of the Ferrers diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int v : p.parts()) {
    for (int j = 0; j < v; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

struct RectDimensions {
  int width;   // the common part size a
  int height;  // the number of parts b
  friend bool operator==(const RectDimensions&, const RectDimensions&) = default;
};

/// (a,b) with p = (a^b) when all parts are equal.
inline std::optional<RectDimensions> rect_dimensions(const Partition& p) {
  if (p.largest() != p.smallest()) return std::nullopt;
  return RectDimensions{p.largest(), static_cast<int>(p.length())};
}

}  // namespace partgraph

#endif  // PARTGRAPH_PARTITION_HPP_
