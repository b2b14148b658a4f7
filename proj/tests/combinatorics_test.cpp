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

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "meander/combinatorics.hpp"

namespace meander {
namespace {

// Catalan numbers by the convolution recurrence, independent of the closed form.
std::vector<BigInt> catalan_by_recurrence(int up_to) {
  std::vector<BigInt> c(static_cast<std::size_t>(up_to + 1), 0);
  c[0] = 1;
  for (int m = 1; m <= up_to; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c;
}

// All perfect matchings of [2n] by recursion on the smallest unmatched
// vertex, kept when no two arcs cross.
int count_non_crossing_brute_force(int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  int count = 0;
  auto crosses = [&]() {
    for (int a = 1; a <= 2 * n; ++a)
      for (int c = a + 1; c <= 2 * n; ++c) {
        const int b = partner[a], d = partner[c];
        if (a < b && c < d && a < c && c < b && b < d) return true;
      }
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    int v = 1;
    while (v <= 2 * n && partner[v] != 0) ++v;
    if (v > 2 * n) {
      if (!crosses()) ++count;
      return;
    }
    for (int w = v + 1; w <= 2 * n; ++w) {
      if (partner[w] != 0) continue;
      partner[v] = w;
      partner[w] = v;
      self(self);
      partner[v] = partner[w] = 0;
    }
  };
  rec(rec);
  return count;
}

// Unordered k-tuples of pairwise disjoint length-m intervals in [n].
long count_disjoint_intervals_brute_force(int n, int m, int k) {
  long count = 0;
  std::vector<int> starts;
  auto rec = [&](auto&& self, int min_start) -> void {
    if (static_cast<int>(starts.size()) == k) {
      ++count;
      return;
    }
    for (int s = min_start; s + m - 1 <= n; ++s) {
      starts.push_back(s);
      self(self, s + m);
      starts.pop_back();
    }
  };
  rec(rec, 1);
  return count;
}

TEST(Catalan, SmallValues) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(2), 2);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(8), 1430);
  EXPECT_EQ(catalan(-1), 0);
}

TEST(Catalan, MatchesConvolutionRecurrence) {
  const auto c = catalan_by_recurrence(60);
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(catalan(n), c[n]) << "n=" << n;
}

TEST(FallingFactorial, Basics) {
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(5, 6), 0);
}

TEST(FallingFactorial, SplitsAtTwentyAndSeventeen) {
  // (2n)_{2r} = (2n)_r (2n - r)_r at n = 10, r = 3, checked against the product
  // written out by hand: 20 19 18 17 16 15.
  EXPECT_EQ(falling_factorial(20, 6), BigInt(20 * 19 * 18) * (17 * 16 * 15));
  EXPECT_EQ(falling_factorial(20, 6), falling_factorial(20, 3) * falling_factorial(17, 3));
  EXPECT_EQ(falling_factorial(17, 3), 4080);
}

TEST(Binomial, EdgeCases) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Matchings, CountMatchesCatalan) {
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(BigInt(enumerate_matchings(n).size()), catalan(n)) << "n=" << n;
}

TEST(Matchings, CountMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_matchings(n).size()), count_non_crossing_brute_force(n));
}

TEST(Matchings, FirstIsFullyNestedAndAllDistinct) {
  const auto all = enumerate_matchings(4);
  EXPECT_EQ(all.front().to_string(), "1-8,2-7,3-6,4-5");
  EXPECT_EQ(all.back().to_string(), "1-2,3-4,5-6,7-8");
  std::set<std::string> seen;
  for (const auto& m : all) seen.insert(m.to_string());
  EXPECT_EQ(seen.size(), all.size());
}

TEST(Matchings, SizeOne) {
  const auto all = enumerate_matchings(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].partner(1), 2);
}

TEST(Dyck, StackDiscipline) {
  EXPECT_EQ(dyck_to_matching(DyckWord::parse("UD")).to_string(), "1-2");
  EXPECT_EQ(dyck_to_matching(DyckWord::parse("UUDD")).to_string(), "1-4,2-3");
  EXPECT_EQ(matching_to_dyck(NonCrossingMatching::parse("1-2,3-6,4-5")).to_string(), "UDUUDD");
}

TEST(Dyck, RejectsMalformedWords) {
  EXPECT_THROW(DyckWord::parse("DU"), std::invalid_argument);
  EXPECT_THROW(DyckWord::parse("UUD"), std::invalid_argument);
  EXPECT_THROW(DyckWord::parse("UXD"), std::invalid_argument);
}

TEST(Dyck, RoundTripAllWordsOfLengthEight) {
  int words = 0;
  for_each_dyck_word(4, [&](std::span<const int> steps) {
    const DyckWord w(std::vector<int>(steps.begin(), steps.end()));
    EXPECT_EQ(matching_to_dyck(dyck_to_matching(w)), w);
    ++words;
  });
  EXPECT_EQ(words, 14);
}

TEST(Dyck, RoundTripAllMatchingsUpToSix) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& m : enumerate_matchings(n)) EXPECT_EQ(dyck_to_matching(matching_to_dyck(m)), m);
}

TEST(Matchings, ParseAndValidate) {
  const auto m = NonCrossingMatching::parse("1-4,2-3");
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.partner(3), 2);
  EXPECT_THROW(NonCrossingMatching::parse("1-3,2-4"), std::invalid_argument);
  EXPECT_THROW(NonCrossingMatching::parse("1-2,2-3"), std::invalid_argument);
  EXPECT_THROW(NonCrossingMatching::parse("1-x"), std::invalid_argument);
  EXPECT_THROW(NonCrossingMatching(std::vector<int>{1, 2}), std::invalid_argument);
}

// Take a random non-crossing matching, pick two arcs (a,b), (c,d) and
// re-pair them as (a,c), (b,d) or (a,d), (b,c) so that exactly one of the
// new arcs straddles an endpoint of the other. The validator must object.
TEST(Matchings, RejectsPlantedCrossings) {
  std::mt19937_64 rng(7);
  int planted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto all = enumerate_matchings(n);
    const auto& base = all[rng() % all.size()];
    auto pairs = base.pairs();
    const std::size_t x = rng() % pairs.size();
    std::size_t y = rng() % pairs.size();
    if (x == y) continue;
    std::array<int, 4> pts{pairs[x].first, pairs[x].second, pairs[y].first, pairs[y].second};
    std::sort(pts.begin(), pts.end());
    // (p0, p2), (p1, p3) always cross.
    pairs[x] = {pts[0], pts[2]};
    pairs[y] = {pts[1], pts[3]};
    std::vector<int> partner(static_cast<std::size_t>(2 * n));
    for (auto [a, b] : pairs) {
      partner[a - 1] = b;
      partner[b - 1] = a;
    }
    EXPECT_NE(NonCrossingMatching::validate(partner), nullptr);
    ++planted;
  }
  EXPECT_GT(planted, 1000);
}

TEST(DisjointIntervals, Examples) {
  EXPECT_EQ(disjoint_interval_count(8, 2, 1), 7);
  EXPECT_EQ(disjoint_interval_count(5, 2, 2), 3);
  EXPECT_EQ(disjoint_interval_count(4, 5, 1), 0);
  EXPECT_THROW(disjoint_interval_count(4, 0, 1), std::invalid_argument);
}

TEST(DisjointIntervals, MatchesPlacementEnumeration) {
  for (int n = 1; n <= 14; ++n)
    for (int m = 1; m <= 5; ++m)
      for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(disjoint_interval_count(n, m, k), count_disjoint_intervals_brute_force(n, m, k))
            << n << " " << m << " " << k;
}

TEST(LogCatalan, AgreesWithExactValues) {
  EXPECT_EQ(log_catalan(0), 0.0);
  EXPECT_NEAR(log_catalan(8), std::log(1430.0), 1e-12);
  for (int n : {1, 10, 100, 500, 1000}) {
    const BigInt c = catalan(n);
    std::size_t bits = boost::multiprecision::msb(c);
    const int shift = bits > 60 ? static_cast<int>(bits) - 60 : 0;
    const double exact = std::log(static_cast<double>(BigInt(c >> shift))) + shift * std::log(2.0);
    EXPECT_NEAR(log_catalan(n), exact, 1e-12 * std::max(1.0, exact)) << "n=" << n;
  }
}

// Cat_{n-r} / Cat_n against 4^{-r} at n = 1e6, r = 1000. The exact ratio is
// 4^{-r} exp(3r / 2n + O(r^2 / n^2)), so the relative deviation is close to
// 3r / 2n = 0.0015.
TEST(LogCatalan, RatioAgainstPowerOfFour) {
  const std::int64_t n = 1'000'000, r = 1000;
  const double log_ratio = log_catalan(n - r) - log_catalan(n) + static_cast<double>(r) * std::log(4.0);
  const double relative = std::expm1(log_ratio);
  EXPECT_GT(relative, 0.0014);
  EXPECT_LT(relative, 0.0016);
  EXPECT_LT(std::abs(log_ratio), 0.01);
}

TEST(LogFalling, FactorialAsymptotic) {
  const double n = 1e6;
  const std::int64_t k = 1000;
  const double log_ratio = log_falling_factorial(n, k) - (static_cast<double>(k) * std::log(n) - k * k / (2 * n));
  EXPECT_LT(std::abs(std::expm1(log_ratio)), 0.01);
}

}  // namespace
}  // namespace meander
