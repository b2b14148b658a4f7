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

// Brute-force ground truth: every one of the Cat_n^2 meandric systems of size
// n is visited, so all quantities here are exact rationals.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/meandric_system.hpp"
#include "meander/rational.hpp"
#include "meander/shape.hpp"
#include "meander/shape_analysis.hpp"

namespace meander {

inline constexpr int kOracleDefaultCap = 8;
inline constexpr int kOracleHardCap = 9;

struct OracleOptions {
  int max_n = kOracleDefaultCap;  // raise to 9 to allow the 23.6M-system sweep
  int workers = 1;
};

class OracleCapExceeded : public std::out_of_range {
 public:
  explicit OracleCapExceeded(const std::string& what) : std::out_of_range(what) {}
};

/// Histogram x -> number of systems with X_{S,n} = x.
using Distribution = std::map<int, std::uint64_t>;

namespace detail {

inline void check_oracle_size(int n, const OracleOptions& opts) {
  if (n < 1) throw std::invalid_argument("exact oracle: n must be >= 1");
  const int cap = std::min(opts.max_n, kOracleHardCap);
  if (n > cap)
    throw OracleCapExceeded("exact oracle: n = " + std::to_string(n) + " exceeds the size cap " +
                            std::to_string(cap) +
                            (n <= kOracleHardCap ? " (n = 9 needs an explicit override)" : ""));
}

}  // namespace detail

/// Folds visit(view, acc) over every meandric system of size n. Worker w takes
/// upper matchings w, w + W, ...; per-worker accumulators are merged in worker
/// order, so any associative and commutative merge gives a result independent
/// of the worker count.
template <class Acc, class Visit, class Merge>
Acc reduce_systems(int n, const OracleOptions& opts, Acc init, Visit visit, Merge merge) {
  detail::check_oracle_size(n, opts);
  const auto matchings = enumerate_matchings(n);
  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(matchings.size())));
  std::vector<Acc> partial(static_cast<std::size_t>(workers), init);
  auto run = [&](int w) {
    for (std::size_t u = static_cast<std::size_t>(w); u < matchings.size(); u += static_cast<std::size_t>(workers))
      for (const auto& lower : matchings)
        visit(SystemView{matchings[u].partners(), lower.partners()}, partial[static_cast<std::size_t>(w)]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Acc total = std::move(init);
  for (auto& p : partial) merge(total, p);
  return total;
}

/// Distributions of X_{S,n} for several shapes from a single sweep.
inline std::vector<Distribution> exact_distributions(int n, std::span<const Shape> shapes,
                                                     const OracleOptions& opts = {}) {
  using Table = std::vector<std::vector<std::uint64_t>>;  // [shape][x]
  const Table empty(shapes.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  struct Acc {
    Table table;
    std::vector<char> seen;
    std::vector<int> counts;
  };
  Acc init{empty, {}, std::vector<int>(shapes.size(), 0)};
  Acc total = reduce_systems(
      n, opts, init,
      [&](SystemView sys, Acc& acc) {
        std::fill(acc.counts.begin(), acc.counts.end(), 0);
        for_each_loop(sys, acc.seen, [&](int left, int vertices, int right) {
          for (std::size_t s = 0; s < shapes.size(); ++s) {
            const Shape& shape = shapes[s];
            if (vertices == static_cast<int>(shape.support().size()) &&
                right - left + 1 == shape.base_size() && indicator_y(sys, left, shape))
              ++acc.counts[s];
          }
        });
        for (std::size_t s = 0; s < shapes.size(); ++s) ++acc.table[s][static_cast<std::size_t>(acc.counts[s])];
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t s = 0; s < into.table.size(); ++s)
          for (std::size_t x = 0; x < into.table[s].size(); ++x) into.table[s][x] += from.table[s][x];
      });
  std::vector<Distribution> out(shapes.size());
  for (std::size_t s = 0; s < shapes.size(); ++s)
    for (std::size_t x = 0; x < total.table[s].size(); ++x)
      if (total.table[s][x] != 0) out[s][static_cast<int>(x)] = total.table[s][x];
  return out;
}

inline Distribution exact_distribution(int n, const Shape& shape, const OracleOptions& opts = {}) {
  return exact_distributions(n, std::span<const Shape>(&shape, 1), opts).front();
}

/// E[(X)_r] = sum_x (x)_r count(x) / Cat_n^2 for a distribution over size-n systems.
inline Rational factorial_moment_of(const Distribution& dist, int n, int r) {
  if (r < 0) throw std::invalid_argument("factorial moment: r must be non-negative");
  BigInt total = 0;
  for (const auto& [x, count] : dist) total += falling_factorial(BigInt(x), r) * count;
  const BigInt cat = catalan(n);
  return Rational(total, cat * cat);
}

inline Rational exact_factorial_moment(int n, int r, const Shape& shape, const OracleOptions& opts = {}) {
  return factorial_moment_of(exact_distribution(n, shape, opts), n, r);
}

/// E[Y_1 Y_i] from the shape constants: K_i Cat_{n - (2 ell_i - 2c+(i))/2} Cat_{n - (2 ell_i - 2c-(i))/2} / Cat_n^2,
/// zero when i is not an overlap offset.
inline Rational pair_probability_closed_form(int n, int i, const ShapeConstants& c) {
  for (const auto& o : c.overlaps) {
    if (o.offset != i) continue;
    if (o.two_ell > 2 * n) return 0;
    return Rational(o.k) * catalan_ratio(n - (o.two_ell - o.two_c_plus) / 2, n) *
           catalan_ratio(n - (o.two_ell - o.two_c_minus) / 2, n);
  }
  return 0;
}

struct PairProbability {
  Rational enumerated;
  Rational closed_form;
  bool agree() const { return enumerated == closed_form; }
};

/// Fraction of size-n systems having loops of shape S starting at 1 and at i.
inline PairProbability exact_pair_probability(int n, int i, const Shape& shape,
                                              const OracleOptions& opts = {}) {
  if (i < 2) throw std::invalid_argument("exact_pair_probability: i must be >= 2");
  if (shape.base_size() + i - 1 > 2 * n)
    throw std::invalid_argument("exact_pair_probability: the pair's combined base does not fit in [2n]");
  const std::uint64_t hits = reduce_systems(
      n, opts, std::uint64_t{0},
      [&](SystemView sys, std::uint64_t& acc) {
        if (indicator_y(sys, 1, shape) && indicator_y(sys, i, shape)) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
  const BigInt cat = catalan(n);
  return {Rational(BigInt(hits), cat * cat), pair_probability_closed_form(n, i, shape_constants(shape))};
}

/// Splits E[(X)_r] / r! by the number u of blocks of each r-subset of loop
/// positions, blocks being the classes of the closure of |p - q| < 2 ell.
inline std::map<int, Rational> block_spectrum(int n, int r, const Shape& shape, const OracleOptions& opts = {}) {
  if (r < 1 || r > 3) throw std::invalid_argument("block_spectrum: r must be in [1, 3]");
  const int span = shape.base_size();
  struct Acc {
    std::vector<std::uint64_t> by_blocks;
    std::vector<char> seen;
    std::vector<int> starts;
  };
  Acc init{std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 1, 0), {}, {}};
  Acc total = reduce_systems(
      n, opts, init,
      [&](SystemView sys, Acc& acc) {
        acc.starts.clear();
        for_each_loop(sys, acc.seen, [&](int left, int vertices, int right) {
          if (vertices == static_cast<int>(shape.support().size()) && right - left + 1 == span &&
              indicator_y(sys, left, shape))
            acc.starts.push_back(left);
        });
        const auto& p = acc.starts;
        const std::size_t x = p.size();
        std::vector<std::size_t> pick(static_cast<std::size_t>(r));
        auto recurse = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
          if (depth == pick.size()) {
            int blocks = 1;
            for (std::size_t k = 1; k < pick.size(); ++k)
              if (p[pick[k]] - p[pick[k - 1]] >= span) ++blocks;
            ++acc.by_blocks[static_cast<std::size_t>(blocks)];
            return;
          }
          for (std::size_t j = from; j < x; ++j) {
            pick[depth] = j;
            self(self, depth + 1, j + 1);
          }
        };
        recurse(recurse, 0, 0);
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t u = 0; u < into.by_blocks.size(); ++u) into.by_blocks[u] += from.by_blocks[u];
      });
  const BigInt cat = catalan(n);
  std::map<int, Rational> out;
  for (int u = 1; u <= r; ++u) out[u] = Rational(BigInt(total.by_blocks[static_cast<std::size_t>(u)]), cat * cat);
  return out;
}

struct MomentReport {
  int n = 0;
  int r = 0;
  std::string shape;
  Rational exact;
  std::optional<Rational> formula;  // absent for weak shapes with r >= 2
  Rational lower_bound;             // r! F_r
};

inline MomentReport moment_report_from(const Distribution& dist, int n, int r, const ShapeConstants& c) {
  MomentReport m;
  m.n = n;
  m.r = r;
  m.shape = c.shape.to_string();
  m.exact = factorial_moment_of(dist, n, r);
  BigInt r_factorial = falling_factorial(BigInt(r), r);
  m.lower_bound = Rational(r_factorial) * non_overlapping_term(n, r, c);
  if (c.strong) m.formula = strong_factorial_moment(n, r, c);
  else if (r <= 1) m.formula = m.lower_bound;
  return m;
}

inline MomentReport moment_report(int n, int r, const Shape& shape, const OracleOptions& opts = {}) {
  return moment_report_from(exact_distribution(n, shape, opts), n, r, shape_constants(shape));
}

/// CSV with header "x,count".
inline std::string distribution_csv(const Distribution& dist) {
  std::ostringstream out;
  out << "x,count\n";
  for (const auto& [x, count] : dist) out << x << ',' << count << '\n';
  return out.str();
}

}  // namespace meander
