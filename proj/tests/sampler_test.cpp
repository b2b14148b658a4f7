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
#include <map>

#include <gtest/gtest.h>

#include "meander/philox.hpp"
#include "meander/sampler.hpp"
#include "meander/statistics.hpp"

namespace meander {
namespace {

constexpr std::uint64_t kSeed = 424242;

// Published known-answer vectors for Philox4x32-10.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterStream, BoundedDrawsStayInRangeAndCoverIt) {
  CounterStream rng(kSeed, 3, 0);
  std::map<std::uint32_t, int> seen;
  for (int k = 0; k < 7000; ++k) {
    const std::uint32_t x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++seen[x];
  }
  EXPECT_EQ(seen.size(), 7u);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(CounterStream(kSeed, 3, 0).below(1), 0u);
}

TEST(Sampler, SizeOneIsForced) {
  for (std::uint64_t p = 0; p < 50; ++p) EXPECT_EQ(sample_matching(1, kSeed, p).to_string(), "1-2");
  EXPECT_THROW(sample_matching(0, kSeed, 0), std::invalid_argument);
}

TEST(Sampler, PureFunctionOfSeedAndPosition) {
  for (std::uint64_t p = 0; p < 100; ++p) {
    EXPECT_EQ(sample_matching(30, kSeed, p), sample_matching(30, kSeed, p));
    EXPECT_EQ(sample_dyck_word(30, kSeed, p, kLowerSubstream), sample_dyck_word(30, kSeed, p, kLowerSubstream));
  }
  int differ = 0;
  for (std::uint64_t p = 0; p < 100; ++p)
    differ += sample_matching(30, kSeed, p, kUpperSubstream) != sample_matching(30, kSeed, p, kLowerSubstream);
  EXPECT_GT(differ, 95);
}

TEST(Sampler, ProducesValidWordsAtLargeSize) {
  MatchingSampler sampler;
  std::vector<int> steps;
  for (std::uint64_t p = 0; p < 200; ++p) {
    sampler.sample_steps(500, kSeed, p, kUpperSubstream, steps);
    EXPECT_NO_THROW(DyckWord{steps});
  }
}

ChiSquareResult matching_uniformity(int n, std::uint64_t draws, std::uint32_t substream) {
  std::map<std::string, std::size_t> index;
  for (const auto& m : enumerate_matchings(n)) index.emplace(m.to_string(), index.size());
  std::vector<std::uint64_t> observed(index.size(), 0);
  for (std::uint64_t p = 0; p < draws; ++p) ++observed[index.at(sample_matching(n, kSeed, p, substream).to_string())];
  return chi_square_test(observed, std::vector<double>(index.size(), 1.0 / static_cast<double>(index.size())));
}

TEST(Sampler, UniformOverMatchings) {
  EXPECT_GT(matching_uniformity(2, 100000, kUpperSubstream).p_value, 0.001);
  EXPECT_GT(matching_uniformity(3, 100000, kLowerSubstream).p_value, 0.001);
  const ChiSquareResult four = matching_uniformity(4, 200000, kUpperSubstream);
  EXPECT_EQ(four.degrees_of_freedom, 13);
  EXPECT_GT(four.p_value, 0.001);
}

TEST(Sampler, SystemsUniformAtSizeTwo) {
  std::vector<std::uint64_t> observed(4, 0);
  for (std::uint64_t p = 0; p < 100000; ++p) {
    const MeandricSystem sys = sample_system(2, kSeed, p);
    const int u = sys.upper().partner(1) == 2 ? 1 : 0;
    const int l = sys.lower().partner(1) == 2 ? 1 : 0;
    ++observed[static_cast<std::size_t>(2 * u + l)];
  }
  EXPECT_GT(chi_square_test(observed, std::vector<double>(4, 0.25)).p_value, 0.001);
}

// Upper and lower halves come from different substreams: the indicators
// "1 is matched to 2" above and below should be uncorrelated.
TEST(Sampler, HalvesIndependent) {
  const int n = 10;
  const std::uint64_t draws = 100000;
  double su = 0, sl = 0, sul = 0;
  for (std::uint64_t p = 0; p < draws; ++p) {
    const MeandricSystem sys = sample_system(n, kSeed, p);
    const double u = sys.upper().partner(1) == 2, l = sys.lower().partner(1) == 2;
    su += u;
    sl += l;
    sul += u * l;
  }
  const double d = static_cast<double>(draws);
  const double pu = su / d, pl = sl / d;
  // P(1-2 is an arc) = Cat_{n-1} / Cat_n.
  const double expected = to_double(Rational(catalan(n - 1), catalan(n)));
  EXPECT_NEAR(pu, expected, 4 * std::sqrt(expected * (1 - expected) / d));
  const double cov = sul / d - pu * pl;
  const double sd = std::sqrt(pu * (1 - pu) * pl * (1 - pl) / d);
  EXPECT_LT(std::abs(cov), 4 * sd);
}

}  // namespace
}  // namespace meander
