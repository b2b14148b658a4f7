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

// The verification suite: each check pits an exact oracle, an exact formula,
// an asymptotic evaluator or a Monte Carlo experiment against another and
// records pass/fail with the numbers involved. Shared by the CLI `verify`
// subcommand and the acceptance test binary.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/exact_oracle.hpp"
#include "meander/experiment.hpp"
#include "meander/json_io.hpp"
#include "meander/meandric_system.hpp"
#include "meander/sampler.hpp"
#include "meander/shape.hpp"
#include "meander/shape_analysis.hpp"
#include "meander/statistics.hpp"

namespace meander {

inline constexpr std::uint64_t kVerificationSeed = 20261014;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool statistical = false;  // failure may be statistical rather than a logic error
  std::string detail;
};

struct VerifyOptions {
  int workers = 1;
  std::uint64_t seed = kVerificationSeed;
};

namespace verify_detail {

inline std::vector<Shape> strong_shapes_up_to(int max_ell) {
  std::vector<Shape> out;
  for (const Shape& s : enumerate_shapes_up_to(max_ell))
    if (shape_constants(s).strong) out.push_back(s);
  return out;
}

inline std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace verify_detail

/// Oracle factorial moments equal the strong-shape closed form, zero tolerance.
inline CriterionResult criterion_strong_identity(const VerifyOptions& opts) {
  CriterionResult res{1, "strong-shape factorial moments equal the closed form (ell <= 2 + four-face loop, n <= 7, r <= 3)"};
  std::vector<Shape> shapes = verify_detail::strong_shapes_up_to(2);
  shapes.push_back(four_face_loop());
  std::vector<ShapeConstants> constants;
  for (const auto& s : shapes) constants.push_back(shape_constants(s));
  int checks = 0, mismatches = 0;
  std::string first_mismatch;
  for (int n = 1; n <= 7; ++n) {
    const auto dists = exact_distributions(n, shapes, {kOracleDefaultCap, opts.workers});
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      if (!constants[s].strong) {
        ++mismatches;
        first_mismatch = "shape " + shapes[s].to_string() + " is not strong";
        continue;
      }
      for (int r = 1; r <= 3; ++r) {
        ++checks;
        const Rational exact = factorial_moment_of(dists[s], n, r);
        const Rational formula = strong_factorial_moment(n, r, constants[s]);
        if (exact != formula) {
          if (mismatches++ == 0)
            first_mismatch = shapes[s].to_string() + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             ": " + to_decimal(exact) + " vs " + to_decimal(formula);
        }
      }
    }
  }
  res.passed = mismatches == 0;
  res.detail = std::to_string(shapes.size()) + " shapes, " + std::to_string(checks) + " exact comparisons" +
               (mismatches ? ", first mismatch: " + first_mismatch : ", all equal");
  return res;
}

inline CriterionResult criterion_four_face_constants(const VerifyOptions&) {
  CriterionResult res{2, "four-face loop constants K = 10, c+ = 1, c- = 0"};
  const ShapeConstants c = shape_constants(four_face_loop());
  res.passed = c.k == 10 && c.c_plus == 1 && c.c_minus == 0;
  res.detail = "K=" + c.k.str() + " c+=" + std::to_string(c.c_plus) + " c-=" + std::to_string(c.c_minus);
  return res;
}

inline CriterionResult criterion_simple_loop_params(const VerifyOptions&) {
  CriterionResult res{3, "simple loop mu = 1/8, sigma^2 = 13/128"};
  const GaussianParams g = gaussian_params(shape_constants(simple_loop()));
  res.passed = g.mu == Rational(1, 8) && g.sigma2 == Rational(13, 128);
  res.detail = "mu=" + to_decimal(g.mu) + " sigma2=" + to_decimal(g.sigma2);
  return res;
}

/// E[X_{S,n}] = F_1 for every shape, since one copy cannot overlap itself.
inline CriterionResult criterion_first_moment(const VerifyOptions& opts) {
  CriterionResult res{4, "E[X] equals F_1 for all shapes ell <= 2, n <= 7"};
  const auto shapes = enumerate_shapes_up_to(2);
  std::vector<ShapeConstants> constants;
  for (const auto& s : shapes) constants.push_back(shape_constants(s));
  int checks = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto dists = exact_distributions(n, shapes, {kOracleDefaultCap, opts.workers});
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      ++checks;
      if (factorial_moment_of(dists[s], n, 1) != non_overlapping_term(n, 1, constants[s])) ++mismatches;
    }
  }
  res.passed = mismatches == 0;
  res.detail = std::to_string(checks) + " comparisons, " + std::to_string(mismatches) + " mismatches";
  return res;
}

inline CriterionResult criterion_weak_structure(const VerifyOptions& opts) {
  CriterionResult res{5, "interleaving loop is weak with 7 in I(S); pair probability and lower bound at n = 8"};
  const Shape shape = interleaving_loop();
  const ShapeConstants c = shape_constants(shape);
  bool has7 = false;
  for (const auto& o : c.overlaps) has7 = has7 || o.offset == 7;
  const OracleOptions oracle{kOracleDefaultCap, opts.workers};
  const PairProbability pair = exact_pair_probability(8, 7, shape, oracle);
  const Distribution dist = exact_distribution(8, shape, oracle);
  const Rational exact2 = factorial_moment_of(dist, 8, 2);
  const Rational bound2 = 2 * non_overlapping_term(8, 2, c);
  res.passed = !c.strong && has7 && pair.enumerated > 0 && pair.agree() && bound2 <= exact2;
  res.detail = std::string("strong=") + (c.strong ? "true" : "false") + " 7inI=" + (has7 ? "true" : "false") +
               " P(Y1Y7)=" + to_decimal(pair.enumerated) + " closed=" + to_decimal(pair.closed_form) +
               " E[(X)_2]=" + to_decimal(exact2) + " 2F_2=" + to_decimal(bound2);
  return res;
}

inline CriterionResult criterion_variance_bound(const VerifyOptions&) {
  CriterionResult res{6, "K(4 ell - 1) < 4^(2 ell - c+ - c-) for every shape ell <= 3"};
  int checked = 0, failed = 0;
  for (const Shape& s : enumerate_shapes_up_to(3)) {
    ++checked;
    if (!variance_bound_holds(shape_constants(s))) ++failed;
  }
  res.passed = failed == 0;
  res.detail = std::to_string(checked) + " shapes, " + std::to_string(failed) + " violations";
  return res;
}

inline CriterionResult criterion_asymptotics(const VerifyOptions&) {
  CriterionResult res{7, "log-moment asymptotics at n = 1e6, r = 1000 within 0.01"};
  constexpr std::int64_t n = 1'000'000, r = 1000;
  double worst = 0;
  for (const Shape& s : verify_detail::strong_shapes_up_to(2)) {
    const ShapeConstants c = shape_constants(s);
    worst = std::max(worst, std::abs(log_strong_factorial_moment(n, r, c) - asymptotic_log_moment(n, r, c)));
  }
  const double catalan_gap = std::abs(log_catalan(n - r) - log_catalan(n) + static_cast<double>(r) * std::log(4.0));
  res.passed = worst < 0.01 && catalan_gap < 0.01;
  res.detail = "max log gap " + verify_detail::fmt(worst) + ", Catalan ratio log gap " + verify_detail::fmt(catalan_gap);
  return res;
}

inline CriterionResult criterion_sampler(const VerifyOptions& opts) {
  CriterionResult res{8, "sampler uniform over the 14 matchings of size 4; summaries identical across worker counts"};
  res.statistical = true;
  constexpr int n = 4;
  constexpr std::uint64_t draws = 1'000'000;
  std::map<std::uint32_t, std::size_t> index;
  for (const auto& m : enumerate_matchings(n)) {
    const DyckWord word = matching_to_dyck(m);
    std::uint32_t code = 0;
    for (int s : word.steps()) code = code * 2 + (s > 0 ? 1U : 0U);
    index.emplace(code, index.size());
  }
  std::vector<std::uint64_t> observed(index.size(), 0);
  MatchingSampler sampler;
  std::vector<int> steps;
  for (std::uint64_t p = 0; p < draws; ++p) {
    sampler.sample_steps(n, opts.seed, p, kUpperSubstream, steps);
    std::uint32_t code = 0;
    for (int s : steps) code = code * 2 + (s > 0 ? 1U : 0U);
    ++observed[index.at(code)];
  }
  const std::vector<double> uniform(index.size(), 1.0 / static_cast<double>(index.size()));
  const ChiSquareResult chi = chi_square_test(observed, uniform);

  ExperimentConfig cfg{200, 4000, simple_loop(), opts.seed, 1, false};
  const std::string one = sample_summary_json(run_experiment(cfg)).dump();
  cfg.workers = 4;
  const std::string four = sample_summary_json(run_experiment(cfg)).dump();
  cfg.workers = 3;
  const std::string three = sample_summary_json(run_experiment(cfg)).dump();
  const bool identical = one == four && one == three;
  res.passed = chi.p_value > 0.001 && identical;
  res.detail = "chi2=" + verify_detail::fmt(chi.statistic) + " df=" + std::to_string(chi.degrees_of_freedom) +
               " p=" + verify_detail::fmt(chi.p_value) + " summaries " + (identical ? "identical" : "DIFFER");
  return res;
}

inline CriterionResult criterion_clt_gates(const VerifyOptions& opts) {
  CriterionResult res{9, "CLT gates: simple loop n = 2000 and interleaving loop n = 4000, 20000 samples each"};
  res.statistical = true;
  const SampleSummary simple = run_experiment({2000, 20000, simple_loop(), opts.seed, opts.workers, false});
  const auto simple_gates = evaluate_gates(simple, StatisticalGates{});
  StatisticalGates weak_gates;
  weak_gates.check_shape = false;
  const SampleSummary weak = run_experiment({4000, 20000, interleaving_loop(), opts.seed, opts.workers, false});
  const auto weak_results = evaluate_gates(weak, weak_gates);
  res.passed = all_passed(simple_gates) && all_passed(weak_results);
  std::string detail = "simple:";
  for (const auto& g : simple_gates) detail += " " + g.name + "=" + verify_detail::fmt(g.value) + (g.passed ? "" : "(FAIL)");
  detail += "; interleaving:";
  for (const auto& g : weak_results) detail += " " + g.name + "=" + verify_detail::fmt(g.value) + (g.passed ? "" : "(FAIL)");
  res.detail = detail;
  return res;
}

inline CriterionResult criterion_tightness(const VerifyOptions&) {
  CriterionResult res{10, "B_{r,u+1} / B_{r,u} >= 2 at n = 1e4, r = 10 (simple and interleaving loops)"};
  constexpr std::int64_t n = 10'000;
  const auto r = static_cast<std::int64_t>(std::floor(0.1 * std::sqrt(static_cast<double>(n))));
  bool all = true;
  std::string detail = "r=" + std::to_string(r);
  for (const auto& [name, shape] : {std::pair{"simple", simple_loop()}, std::pair{"interleaving", interleaving_loop()}}) {
    const TightnessProfile p = tightness_profile(n, r, shape_constants(shape));
    const bool ok = p.min_ratio && *p.min_ratio >= 2;
    all = all && ok;
    detail += std::string(" ") + name + " min ratio=" + (p.min_ratio ? verify_detail::fmt(to_double(*p.min_ratio)) : "n/a") +
              (ok ? "" : "(FAIL)");
  }
  res.passed = all;
  res.detail = detail;
  return res;
}

enum class Suite { small, full };

inline std::vector<int> suite_criteria(Suite suite) {
  if (suite == Suite::small) return {1, 2, 3, 4, 7, 8, 9, 10};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

inline CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static const std::map<int, Fn> table{
      {1, criterion_strong_identity}, {2, criterion_four_face_constants}, {3, criterion_simple_loop_params},
      {4, criterion_first_moment},    {5, criterion_weak_structure},      {6, criterion_variance_bound},
      {7, criterion_asymptotics},     {8, criterion_sampler},             {9, criterion_clt_gates},
      {10, criterion_tightness}};
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  return it->second(opts);
}

inline std::vector<CriterionResult> run_suite(Suite suite, const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, opts));
  return out;
}

inline Json criterion_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"title", r.title}, {"pass", r.passed}, {"statistical", r.statistical}, {"detail", r.detail}};
}

}  // namespace meander
