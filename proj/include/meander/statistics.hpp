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
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace meander {

struct SampleMoments {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;  // unbiased
  double skewness = 0;  // m3 / m2^{3/2}
  double excess_kurtosis = 0;  // m4 / m2^2 - 3
  double variance_standard_error = 0;
};

/// Moments from central sums, accumulated in input order.
inline SampleMoments sample_moments(std::span<const double> xs) {
  SampleMoments m;
  m.count = xs.size();
  if (xs.empty()) return m;
  const double n = static_cast<double>(xs.size());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double s2 = 0, s3 = 0, s4 = 0;
  for (double x : xs) {
    const double d = x - m.mean;
    const double d2 = d * d;
    s2 += d2;
    s3 += d2 * d;
    s4 += d2 * d2;
  }
  const double m2 = s2 / n, m3 = s3 / n, m4 = s4 / n;
  if (xs.size() > 1) m.variance = s2 / (n - 1);
  if (m2 > 0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  if (xs.size() > 3) {
    const double v = m.variance;
    m.variance_standard_error = std::sqrt(std::max(0.0, (m4 - v * v * (n - 3) / (n - 1)) / n));
  }
  return m;
}

struct AndersonDarlingResult {
  double statistic = 0;       // A^2 of the standardized sample against N(0, 1)
  double critical_1pct = 0;   // size-adjusted critical value for estimated mean and variance
  bool passes_1pct = false;
};

/// Anderson-Darling normality test with mean and variance estimated from the
/// sample; critical value 1.092 / (1 + 4/N - 25/N^2) (Stephens).
inline AndersonDarlingResult anderson_darling_normal(std::vector<double> xs) {
  if (xs.size() < 8) throw std::invalid_argument("anderson_darling_normal: need at least 8 values");
  const double n = static_cast<double>(xs.size());
  std::sort(xs.begin(), xs.end());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1));
  if (!(sd > 0)) throw std::invalid_argument("anderson_darling_normal: sample has zero variance");
  // ln Phi(z) and ln(1 - Phi(z)) through erfc keep precision in both tails.
  auto log_cdf = [](double z) { return std::log(0.5 * std::erfc(-z / std::sqrt(2.0))); };
  auto log_sf = [](double z) { return std::log(0.5 * std::erfc(z / std::sqrt(2.0))); };
  double sum = 0;
  const std::size_t size = xs.size();
  for (std::size_t i = 0; i < size; ++i) {
    const double zi = (xs[i] - mean) / sd;
    const double zr = (xs[size - 1 - i] - mean) / sd;
    sum += (2.0 * static_cast<double>(i) + 1.0) * (log_cdf(zi) + log_sf(zr));
  }
  AndersonDarlingResult r;
  r.statistic = -n - sum / n;
  r.critical_1pct = 1.092 / (1.0 + 4.0 / n - 25.0 / (n * n));
  r.passes_1pct = r.statistic < r.critical_1pct;
  return r;
}

struct ChiSquareResult {
  double statistic = 0;
  int degrees_of_freedom = 0;
  double p_value = 0;
};

/// Pearson goodness of fit of observed counts against expected probabilities.
inline ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2)
    throw std::invalid_argument("chi_square_test: need matching observed/expected of size >= 2");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult r;
  for (std::size_t j = 0; j < observed.size(); ++j) {
    const double expected = total * probabilities[j];
    const double d = static_cast<double>(observed[j]) - expected;
    r.statistic += d * d / expected;
  }
  r.degrees_of_freedom = static_cast<int>(observed.size()) - 1;
  boost::math::chi_squared_distribution<double> dist(r.degrees_of_freedom);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

}  // namespace meander
