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

// JSON renderings of the engine's reports. Exact rationals are written as
// {"num": "...", "den": "..."} with decimal strings; big integers as decimal
// strings.

#pragma once

#include <string>

#include <json.hpp>

#include "meander/exact_oracle.hpp"
#include "meander/experiment.hpp"
#include "meander/rational.hpp"
#include "meander/shape_analysis.hpp"

namespace meander {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) {
  return Json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

inline Rational rational_from_json(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

inline Json constants_json(const ShapeConstants& c, const GaussianParams& g) {
  Json overlaps = Json::array();
  for (const auto& o : c.overlaps)
    overlaps.push_back({{"i", o.offset},
                        {"twoEllI", o.two_ell},
                        {"KI", o.k.str()},
                        {"twoCPlusI", o.two_c_plus},
                        {"twoCMinusI", o.two_c_minus},
                        {"bI", to_json(o.b)}});
  return Json{{"shape", c.shape.to_string()},
              {"ell", c.ell},
              {"K", c.k.str()},
              {"cPlus", c.c_plus},
              {"cMinus", c.c_minus},
              {"strong", c.strong},
              {"overlaps", overlaps},
              {"mu", to_json(g.mu)},
              {"sigma2", to_json(g.sigma2)},
              {"muReal", g.mu_real},
              {"sigma2Real", g.sigma2_real},
              {"varianceBoundHolds", variance_bound_holds(c)}};
}

inline Json constants_json(const ShapeConstants& c) { return constants_json(c, gaussian_params(c)); }

inline Json moment_report_json(const MomentReport& m) {
  Json j{{"n", m.n}, {"r", m.r}, {"shape", m.shape}, {"exactMoment", to_json(m.exact)}};
  j["formulaMoment"] = m.formula ? to_json(*m.formula) : Json(nullptr);
  j["lowerBoundRFr"] = to_json(m.lower_bound);
  return j;
}

inline Json sample_summary_json(const SampleSummary& s) {
  Json histogram = Json::array();
  for (const auto& [x, count] : s.histogram) histogram.push_back({{"x", x}, {"count", count}});
  return Json{{"n", s.n},
              {"samples", s.samples},
              {"seed", s.seed},
              {"shape", s.shape},
              {"histogram", histogram},
              {"mean", s.mean},
              {"variance", s.variance},
              {"skewness", s.skewness},
              {"excessKurtosis", s.excess_kurtosis},
              {"varianceStandardError", s.variance_standard_error},
              {"predictedMean", s.predicted_mean},
              {"predictedVariance", s.predicted_variance},
              {"meanZ", s.mean_z},
              {"varianceRatio", s.variance_ratio},
              {"varianceZ", s.variance_z},
              {"standardizedMean", s.standardized_mean},
              {"andersonDarling", {{"statistic", s.ad_statistic}, {"critical1pct", s.ad_critical_1pct}, {"pass", s.ad_pass}}}};
}

inline Json gates_json(const std::vector<GateOutcome>& gates) {
  Json out = Json::array();
  for (const auto& g : gates) out.push_back({{"gate", g.name}, {"value", g.value}, {"bound", g.bound}, {"pass", g.passed}});
  return out;
}

inline Json distribution_json(const Distribution& dist) {
  Json out = Json::array();
  for (const auto& [x, count] : dist) out.push_back({{"x", x}, {"count", count}});
  return out;
}

}  // namespace meander
