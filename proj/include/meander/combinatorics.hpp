// Copyright 2026 The meander Authors.
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meander/rational.hpp"

namespace meander {

// ---------------------------------------------------------------------------
// Exact integer primitives
// ---------------------------------------------------------------------------

/// Cat_n = (2n)! / (n! (n+1)!). Negative n yields 0 so that callers may pass
/// out-of-range indices and get an empty count.
inline BigInt catalan(std::int64_t n) {
  if (n < 0) return 0;
  BigInt c = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= (k + 2);
  }
  return c;
}

/// (N)_k = N (N-1) ... (N-k+1); (N)_0 = 1.
inline BigInt falling_factorial(const BigInt& N, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be non-negative");
  BigInt result = 1;
  for (std::int64_t j = 0; j < k; ++j) result *= (N - j);
  return result;
}

/// binom(N, k) for N >= 0; zero when k > N or k < 0.
inline BigInt binomial(std::int64_t N, std::int64_t k) {
  if (k < 0 || N < 0 || k > N) return 0;
  k = std::min(k, N - k);
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= (N - k + j);
    result /= j;
  }
  return result;
}

/// Number of unordered k-tuples of pairwise disjoint intervals of size m
/// inside [n]: binom(n - k(m-1), k).
inline BigInt disjoint_interval_count(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 1 || m < 1 || k < 1)
    throw std::invalid_argument("disjoint_interval_count: n, m, k must be >= 1");
  const std::int64_t top = n - k * (m - 1);
  if (top < k) return 0;
  return binomial(top, k);
}

// ---------------------------------------------------------------------------
// Log-scale evaluators
// ---------------------------------------------------------------------------

inline double log_factorial(double x) { return std::lgamma(x + 1.0); }

/// ln Cat_n via log-gamma.
inline double log_catalan(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("log_catalan: n must be non-negative");
  const auto x = static_cast<double>(n);
  return std::lgamma(2.0 * x + 1.0) - std::lgamma(x + 1.0) - std::lgamma(x + 2.0);
}

/// ln (N)_k for real N >= k - 1.
inline double log_falling_factorial(double N, std::int64_t k) {
  return std::lgamma(N + 1.0) - std::lgamma(N - static_cast<double>(k) + 1.0);
}

// ---------------------------------------------------------------------------
// Dyck words and non-crossing matchings
// ---------------------------------------------------------------------------

/// Balanced word over {+1, -1} with non-negative prefix sums. Text form is a
/// string over "UD".
class DyckWord {
 public:
  DyckWord() = default;

  explicit DyckWord(std::vector<int> steps) : steps_(std::move(steps)) {
    long height = 0;
    for (int s : steps_) {
      if (s != 1 && s != -1) throw std::invalid_argument("DyckWord: steps must be +1 or -1");
      height += s;
      if (height < 0) throw std::invalid_argument("DyckWord: prefix sum goes negative");
    }
    if (height != 0) throw std::invalid_argument("DyckWord: word is not balanced");
  }

  static DyckWord parse(std::string_view text) {
    std::vector<int> steps;
    steps.reserve(text.size());
    for (char ch : text) {
      if (ch == 'U') steps.push_back(1);
      else if (ch == 'D') steps.push_back(-1);
      else throw std::invalid_argument("DyckWord: expected only 'U' and 'D'");
    }
    return DyckWord(std::move(steps));
  }

  std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (int s : steps_) out.push_back(s > 0 ? 'U' : 'D');
    return out;
  }

  std::span<const int> steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size() / 2); }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;

 private:
  std::vector<int> steps_;
};

/// Non-crossing perfect matching of [2n], vertices 1-based.
class NonCrossingMatching {
 public:
  NonCrossingMatching() = default;

  /// `partner` has length 2n; entry v-1 holds the partner of vertex v.
  explicit NonCrossingMatching(std::vector<int> partner) : partner_(std::move(partner)) {
    if (const char* why = validate(partner_)) throw std::invalid_argument(why);
  }

  static NonCrossingMatching from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    for (auto [a, b] : pairs) {
      if (a < 1 || b < 1 || a > 2 * n || b > 2 * n)
        throw std::invalid_argument("NonCrossingMatching: vertex out of range");
      if (partner[a - 1] != 0 || partner[b - 1] != 0)
        throw std::invalid_argument("NonCrossingMatching: vertex matched twice");
      partner[a - 1] = b;
      partner[b - 1] = a;
    }
    return NonCrossingMatching(std::move(partner));
  }

  /// Parses "a-b,c-d,...".
  static NonCrossingMatching parse(std::string_view text);

  /// nullptr when valid, else a static diagnostic.
  static const char* validate(std::span<const int> partner) {
    const auto size = static_cast<int>(partner.size());
    if (size % 2 != 0) return "NonCrossingMatching: odd number of vertices";
    std::vector<int> open;
    for (int v = 1; v <= size; ++v) {
      const int p = partner[v - 1];
      if (p < 1 || p > size) return "NonCrossingMatching: partner out of range";
      if (p == v) return "NonCrossingMatching: fixed point";
      if (partner[p - 1] != v) return "NonCrossingMatching: partner map is not an involution";
      if (p > v) {
        open.push_back(v);
      } else {
        if (open.empty() || open.back() != p) return "NonCrossingMatching: arcs cross";
        open.pop_back();
      }
    }
    return nullptr;
  }

  int size() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int v) const { return partner_[static_cast<std::size_t>(v - 1)]; }
  std::span<const int> partners() const { return partner_; }

  /// Arcs (a, b) with a < b, ascending in a.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int v = 1; v <= 2 * size(); ++v)
      if (partner(v) > v) out.emplace_back(v, partner(v));
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (auto [a, b] : pairs()) {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
  }

  friend bool operator==(const NonCrossingMatching&, const NonCrossingMatching&) = default;

 private:
  std::vector<int> partner_;
};

namespace detail {

inline int parse_positive_int(std::string_view s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty integer");
  long value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(s) + "'");
    value = value * 10 + (ch - '0');
    if (value > 1'000'000'000) throw std::invalid_argument(std::string(what) + ": integer too large");
  }
  return static_cast<int>(value);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

/// Parses "a-b,c-d" into arcs normalized to a < b. Empty input gives no arcs.
inline std::vector<std::pair<int, int>> parse_arcs(std::string_view text, const char* what) {
  std::vector<std::pair<int, int>> arcs;
  if (text.empty()) return arcs;
  for (std::string_view item : split(text, ',')) {
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos)
      throw std::invalid_argument(std::string(what) + ": expected 'a-b', got '" + std::string(item) + "'");
    int a = parse_positive_int(item.substr(0, dash), what);
    int b = parse_positive_int(item.substr(dash + 1), what);
    if (a > b) std::swap(a, b);
    arcs.emplace_back(a, b);
  }
  return arcs;
}

}  // namespace detail

inline NonCrossingMatching NonCrossingMatching::parse(std::string_view text) {
  auto arcs = detail::parse_arcs(text, "NonCrossingMatching");
  return from_pairs(static_cast<int>(arcs.size()), arcs);
}

/// Stack discipline: +1 at v opens an arc, -1 closes the most recent open arc.
inline NonCrossingMatching dyck_to_matching(const DyckWord& w) {
  std::vector<int> partner(w.steps().size(), 0);
  std::vector<int> open;
  open.reserve(w.steps().size() / 2);
  int v = 0;
  for (int s : w.steps()) {
    ++v;
    if (s > 0) {
      open.push_back(v);
    } else {
      const int a = open.back();
      open.pop_back();
      partner[a - 1] = v;
      partner[v - 1] = a;
    }
  }
  return NonCrossingMatching(std::move(partner));
}

inline DyckWord matching_to_dyck(const NonCrossingMatching& m) {
  std::vector<int> steps(static_cast<std::size_t>(2 * m.size()));
  for (int v = 1; v <= 2 * m.size(); ++v) steps[v - 1] = m.partner(v) > v ? 1 : -1;
  return DyckWord(std::move(steps));
}

/// Visits every Dyck word of semilength n in lexicographic order of the "UD"
/// string with U ordered before D (so U^n D^n comes first).
template <class Visit>
void for_each_dyck_word(int n, Visit&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_dyck_word: n must be non-negative");
  std::vector<int> steps(static_cast<std::size_t>(2 * n));
  // Depth-first; `ups` counts the U steps placed so far.
  auto recurse = [&](auto&& self, int pos, int ups) -> void {
    if (pos == 2 * n) {
      visit(std::span<const int>(steps));
      return;
    }
    const int downs = pos - ups;
    if (ups < n) {
      steps[pos] = 1;
      self(self, pos + 1, ups + 1);
    }
    if (downs < ups) {
      steps[pos] = -1;
      self(self, pos + 1, ups);
    }
  };
  recurse(recurse, 0, 0);
}

/// All non-crossing matchings of [2n], in Dyck-word lexicographic order.
inline std::vector<NonCrossingMatching> enumerate_matchings(int n) {
  std::vector<NonCrossingMatching> out;
  for_each_dyck_word(n, [&](std::span<const int> steps) {
    out.push_back(dyck_to_matching(DyckWord(std::vector<int>(steps.begin(), steps.end()))));
  });
  return out;
}

}  // namespace meander
