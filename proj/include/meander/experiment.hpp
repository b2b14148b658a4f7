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
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "meander/meandric_system.hpp"
#include "meander/philox.hpp"
#include "meander/sampler.hpp"
#include "meander/shape.hpp"
#include "meander/shape_analysis.hpp"
#include "meander/statistics.hpp"

namespace meander {

struct ExperimentConfig {
  int n = 0;
  std::uint64_t samples = 0;
  Shape shape;
  std::uint64_t seed = 0;
  int workers = 1;
  bool keep_samples = false;
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("experiment: n must be >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("experiment: sample count must be >= 1");
  if (cfg.shape.base_size() > 2 * cfg.n)
    throw std::invalid_argument("experiment: shape of half-length " + std::to_string(cfg.shape.half_length()) +
                                " does not fit in a system of size " + std::to_string(cfg.n));
}

struct SampleSummary {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string shape;
  std::map<int, std::uint64_t> histogram;
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  double variance_standard_error = 0;
  double predicted_mean = 0;      // mu_S n
  double predicted_variance = 0;  // sigma_S^2 n
  double mean_z = 0;              // (mean - mu n) / sqrt(sigma^2 n / N)
  double variance_ratio = 0;      // variance / (sigma^2 n)
  double variance_z = 0;          // (variance - sigma^2 n) / variance standard error
  double standardized_mean = 0;   // (mean - mu n) / (sigma sqrt n)
  // Anderson-Darling on X + U(-1/2, 1/2); the jitter turns the integer-valued
  // counts into a continuous sample with the same limiting law.
  double ad_statistic = 0;
  double ad_critical_1pct = 0;
  bool ad_pass = false;
  std::vector<int> values;  // X per stream position, when requested
};

/// X_{S,n} at every stream position 0..samples-1, computed by `workers`
/// threads over contiguous ranges. Each value depends only on (seed, position).
inline std::vector<int> sample_counts(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<int> values(static_cast<std::size_t>(cfg.samples));
  const auto workers = static_cast<std::uint64_t>(std::max(1, cfg.workers));
  auto run = [&](std::uint64_t from, std::uint64_t to) {
    MatchingSampler sampler;
    std::vector<int> upper, lower;
    for (std::uint64_t p = from; p < to; ++p) {
      sampler.sample_partners(cfg.n, cfg.seed, p, kUpperSubstream, upper);
      sampler.sample_partners(cfg.n, cfg.seed, p, kLowerSubstream, lower);
      values[static_cast<std::size_t>(p)] = count_shape_by_indicator(SystemView{upper, lower}, cfg.shape);
    }
  };
  if (workers == 1) {
    run(0, cfg.samples);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.samples + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t from = std::min(cfg.samples, w * chunk);
      const std::uint64_t to = std::min(cfg.samples, from + chunk);
      if (from < to) pool.emplace_back(run, from, to);
    }
  }
  return values;
}

/// Summary statistics of sampled counts against the shape's Gaussian limit.
/// All reductions run sequentially in position order, so the summary is
/// bit-identical for any worker count.
inline SampleSummary summarize(const ExperimentConfig& cfg, const std::vector<int>& values) {
  SampleSummary s;
  s.n = cfg.n;
  s.samples = cfg.samples;
  s.seed = cfg.seed;
  s.shape = cfg.shape.to_string();
  std::vector<double> xs(values.begin(), values.end());
  for (int x : values) ++s.histogram[x];
  const SampleMoments m = sample_moments(xs);
  s.mean = m.mean;
  s.variance = m.variance;
  s.skewness = m.skewness;
  s.excess_kurtosis = m.excess_kurtosis;
  s.variance_standard_error = m.variance_standard_error;

  const GaussianParams g = gaussian_params(shape_constants(cfg.shape));
  const double n = static_cast<double>(cfg.n);
  const double count = static_cast<double>(cfg.samples);
  s.predicted_mean = g.mu_real * n;
  s.predicted_variance = g.sigma2_real * n;
  s.mean_z = (s.mean - s.predicted_mean) / std::sqrt(s.predicted_variance / count);
  s.variance_ratio = s.variance / s.predicted_variance;
  s.variance_z = s.variance_standard_error > 0
                     ? (s.variance - s.predicted_variance) / s.variance_standard_error
                     : 0.0;
  s.standardized_mean = (s.mean - s.predicted_mean) / std::sqrt(s.predicted_variance);

  if (cfg.samples >= 8) {
    std::vector<double> jittered(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) {
      CounterStream rng(cfg.seed, p, kJitterSubstream);
      jittered[p] = xs[p] + rng.uniform01() - 0.5;
    }
    const AndersonDarlingResult ad = anderson_darling_normal(std::move(jittered));
    s.ad_statistic = ad.statistic;
    s.ad_critical_1pct = ad.critical_1pct;
    s.ad_pass = ad.passes_1pct;
  }
  if (cfg.keep_samples) s.values = values;
  return s;
}

inline SampleSummary run_experiment(const ExperimentConfig& cfg) { return summarize(cfg, sample_counts(cfg)); }

struct StatisticalGates {
  double mean_tolerance = 0.002;  // |mean/n - mu_S|
  double variance_ratio_low = 0.95;
  double variance_ratio_high = 1.05;
  double max_abs_skewness = 0.1;
  bool check_shape = true;  // skewness and Anderson-Darling gates
};

struct GateOutcome {
  std::string name;
  double value = 0;
  std::string bound;
  bool passed = false;
};

inline std::vector<GateOutcome> evaluate_gates(const SampleSummary& s, const StatisticalGates& gates) {
  std::vector<GateOutcome> out;
  const double n = static_cast<double>(s.n);
  const double mean_gap = std::abs(s.mean / n - s.predicted_mean / n);
  out.push_back({"mean", mean_gap, "|mean/n - mu| < " + std::to_string(gates.mean_tolerance),
                 mean_gap < gates.mean_tolerance});
  out.push_back({"variance", s.variance_ratio,
                 "variance/(sigma^2 n) in [" + std::to_string(gates.variance_ratio_low) + ", " +
                     std::to_string(gates.variance_ratio_high) + "]",
                 s.variance_ratio >= gates.variance_ratio_low && s.variance_ratio <= gates.variance_ratio_high});
  if (gates.check_shape) {
    out.push_back({"skewness", s.skewness, "|skewness| < " + std::to_string(gates.max_abs_skewness),
                   std::abs(s.skewness) < gates.max_abs_skewness});
    out.push_back({"anderson-darling", s.ad_statistic, "A^2 < " + std::to_string(s.ad_critical_1pct), s.ad_pass});
  }
  return out;
}

inline bool all_passed(const std::vector<GateOutcome>& gates) {
  return std::all_of(gates.begin(), gates.end(), [](const GateOutcome& g) { return g.passed; });
}

struct CltRow {
  int n = 0;
  std::uint64_t samples = 0;
  double standardized_mean = 0;
  double variance_ratio = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  double ad_statistic = 0;
};

struct CltReport {
  std::string shape;
  std::vector<CltRow> rows;

  std::string to_csv() const {
    std::ostringstream out;
    out.precision(10);
    out << "n,samples,standardized_mean,variance_ratio,skewness,excess_kurtosis,ad_statistic\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.samples << ',' << r.standardized_mean << ',' << r.variance_ratio << ','
          << r.skewness << ',' << r.excess_kurtosis << ',' << r.ad_statistic << '\n';
    return out.str();
  }
};

/// Standardized moments across increasing n; should drift toward (0, 1, 0, 0).
inline CltReport clt_report(const std::vector<ExperimentConfig>& configs) {
  if (configs.size() < 2) throw std::invalid_argument("clt_report: needs at least two configurations");
  CltReport report;
  report.shape = configs.front().shape.to_string();
  for (const auto& cfg : configs) {
    const SampleSummary s = run_experiment(cfg);
    report.rows.push_back({s.n, s.samples, s.standardized_mean, s.variance_ratio, s.skewness, s.excess_kurtosis,
                           s.ad_statistic});
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const CltRow& a, const CltRow& b) { return a.n < b.n; });
  return report;
}

}  // namespace meander
