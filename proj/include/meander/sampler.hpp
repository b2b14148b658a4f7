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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/meandric_system.hpp"
#include "meander/philox.hpp"

namespace meander {

inline constexpr std::uint32_t kUpperSubstream = 0;
inline constexpr std::uint32_t kLowerSubstream = 1;
inline constexpr std::uint32_t kJitterSubstream = 2;

/// Exactly uniform non-crossing matchings via the cycle lemma.
///
/// A uniformly random arrangement of n+1 up-steps and n down-steps is drawn;
/// exactly one cyclic rotation of it has all partial sums positive, namely the
/// one starting just after the last minimum of the prefix sums. Dropping that
/// rotation's leading up-step leaves a uniform Dyck word of semilength n, read
/// into a matching by stack discipline. Each of the Cat_n words arises from
/// exactly 2n+1 arrangements, hence uniformity.
///
/// Holds scratch buffers only; the output depends on (n, seed, position,
/// substream) alone.
class MatchingSampler {
 public:
  /// Writes the Dyck word's steps (length 2n, entries +-1) into `steps`.
  void sample_steps(int n, std::uint64_t seed, std::uint64_t position, std::uint32_t substream,
                    std::vector<int>& steps) {
    if (n < 1) throw std::invalid_argument("MatchingSampler: n must be >= 1");
    const int length = 2 * n + 1;
    raw_.resize(static_cast<std::size_t>(length));
    CounterStream rng(seed, position, substream);
    int ups_left = n + 1;
    int height = 0;
    int min_height = 0;
    int min_at = 0;  // prefix index (number of steps taken) of the last minimum
    for (int k = 0; k < length; ++k) {
      const auto remaining = static_cast<std::uint32_t>(length - k);
      const bool up = rng.below(remaining) < static_cast<std::uint32_t>(ups_left);
      raw_[static_cast<std::size_t>(k)] = up ? 1 : -1;
      if (up) --ups_left;
      height += up ? 1 : -1;
      if (k + 1 < length && height <= min_height) {
        min_height = height;
        min_at = k + 1;
      }
    }
    steps.resize(static_cast<std::size_t>(2 * n));
    // Rotation starts at raw_[min_at], which is an up-step; skip it.
    for (int j = 1; j < length; ++j)
      steps[static_cast<std::size_t>(j - 1)] = raw_[static_cast<std::size_t>((min_at + j) % length)];
  }

  /// Writes a partner table (length 2n) of a uniform non-crossing matching.
  void sample_partners(int n, std::uint64_t seed, std::uint64_t position, std::uint32_t substream,
                       std::vector<int>& partner) {
    sample_steps(n, seed, position, substream, steps_);
    partner.resize(steps_.size());
    open_.clear();
    for (int v = 1; v <= 2 * n; ++v) {
      if (steps_[static_cast<std::size_t>(v - 1)] > 0) {
        open_.push_back(v);
      } else {
        const int a = open_.back();
        open_.pop_back();
        partner[static_cast<std::size_t>(a - 1)] = v;
        partner[static_cast<std::size_t>(v - 1)] = a;
      }
    }
  }

 private:
  std::vector<int> raw_;
  std::vector<int> steps_;
  std::vector<int> open_;
};

inline DyckWord sample_dyck_word(int n, std::uint64_t seed, std::uint64_t position,
                                 std::uint32_t substream = kUpperSubstream) {
  MatchingSampler sampler;
  std::vector<int> steps;
  sampler.sample_steps(n, seed, position, substream, steps);
  return DyckWord(std::move(steps));
}

inline NonCrossingMatching sample_matching(int n, std::uint64_t seed, std::uint64_t position,
                                           std::uint32_t substream = kUpperSubstream) {
  MatchingSampler sampler;
  std::vector<int> partner;
  sampler.sample_partners(n, seed, position, substream, partner);
  return NonCrossingMatching(std::move(partner));
}

/// Uniform meandric system: independent upper and lower matchings drawn from
/// two substreams at the same position.
inline MeandricSystem sample_system(int n, std::uint64_t seed, std::uint64_t position) {
  return MeandricSystem(sample_matching(n, seed, position, kUpperSubstream),
                        sample_matching(n, seed, position, kLowerSubstream));
}

}  // namespace meander
