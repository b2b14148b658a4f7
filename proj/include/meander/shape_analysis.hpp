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

// Shape constants and the exact and asymptotic moment formulas built on them.
//
// For a shape S with half-length ell:
//   K      product of Cat_{v/2} over the bounded faces of one copy,
//   c+/c-  half the free-vertex count of the upper/lower unbounded face,
//   e      2 ell - c+ - c-, the power of 4 that appears throughout.
// Overlaps record every offset i (2 <= i <= 2 ell) at which a second copy
// can start while the first copy starts at 1.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/faces.hpp"
#include "meander/rational.hpp"
#include "meander/shape.hpp"

namespace meander {

struct OverlapInfo {
  int offset = 0;        // second copy starts at this vertex
  int two_ell = 0;       // 2 ell_i = 2 ell + offset - 1
  BigInt k = 1;          // K_i
  int two_c_plus = 0;    // 2 c+(i), the free count of the pair's upper unbounded face
  int two_c_minus = 0;   // 2 c-(i)
  Rational b = 0;        // b_i
};

struct ShapeConstants {
  Shape shape;
  int ell = 0;
  BigInt k = 1;
  int c_plus = 0;
  int c_minus = 0;
  bool strong = true;
  std::vector<OverlapInfo> overlaps;

  int exponent() const { return 2 * ell - c_plus - c_minus; }

  /// Sum of b_i over the overlap set; 0 for strong shapes.
  Rational overlap_sum() const {
    Rational sum = 0;
    for (const auto& o : overlaps) sum += o.b;
    return sum;
  }
};

class WeakShapeError : public std::invalid_argument {
 public:
  explicit WeakShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Cat_a / Cat_b for 0 <= a <= b, telescoped through Cat_j / Cat_{j+1} =
/// (j+2) / (2(2j+1)) so large b costs only b - a small factors.
inline Rational catalan_ratio(std::int64_t a, std::int64_t b) {
  if (a < 0) return 0;
  if (a > b) return 1 / catalan_ratio(b, a);
  BigInt num = 1, den = 1;
  for (std::int64_t j = a; j < b; ++j) {
    num *= (j + 2);
    den *= 2 * (2 * j + 1);
  }
  return Rational(num, den);
}

inline Rational pow4(std::int64_t e) { return pow2(2 * e); }

namespace detail {

inline ShapeConstants single_copy_constants(const Shape& shape) {
  const FaceDecomposition faces = face_decomposition(shape);
  if (!faces.bounded_faces_even())
    throw std::logic_error("shape has a bounded face with an odd free-vertex count: " + shape.to_string());
  ShapeConstants c;
  c.shape = shape;
  c.ell = shape.half_length();
  c.k = faces.catalan_product();
  c.c_plus = faces.upper_unbounded / 2;
  c.c_minus = faces.lower_unbounded / 2;
  return c;
}

}  // namespace detail

/// b_i = 4^{4 ell - 2 ell_i + c+(i) - 2c+ + c-(i) - 2c-} K_i / K^2, with the
/// half-integer power of 4 carried as an integer power of 2.
inline Rational b_constant(const ShapeConstants& c, const OverlapInfo& info) {
  const std::int64_t two_exp = 8 * c.ell - 2 * info.two_ell + info.two_c_plus - 4 * c.c_plus +
                               info.two_c_minus - 4 * c.c_minus;
  return pow2(two_exp) * Rational(info.k) / Rational(c.k * c.k);
}

/// Offsets i in [2, 2 ell] at which two copies of the shape (at 1 and at i)
/// can both be loops of one meandric system: disjoint supports, arcs
/// non-crossing in each half-plane, and every bounded face of the pair holding
/// an even number of free vertices.
inline std::vector<OverlapInfo> overlap_scan(const ShapeConstants& base) {
  std::vector<OverlapInfo> out;
  const Shape& shape = base.shape;
  for (int i = 2; i <= shape.base_size(); ++i) {
    const Placement pair[2] = {{&shape, 1}, {&shape, i}};
    auto faces = try_face_decomposition(pair);
    if (!faces || !faces->bounded_faces_even()) continue;
    OverlapInfo info;
    info.offset = i;
    info.two_ell = shape.base_size() + i - 1;
    info.k = faces->catalan_product();
    info.two_c_plus = faces->upper_unbounded;
    info.two_c_minus = faces->lower_unbounded;
    info.b = b_constant(base, info);
    out.push_back(std::move(info));
  }
  return out;
}

inline std::vector<OverlapInfo> overlap_scan(const Shape& shape) {
  return overlap_scan(detail::single_copy_constants(shape));
}

inline ShapeConstants shape_constants(const Shape& shape) {
  ShapeConstants c = detail::single_copy_constants(shape);
  c.overlaps = overlap_scan(c);
  c.strong = c.overlaps.empty();
  return c;
}

/// K (4 ell - 1) < 4^{2 ell - c+ - c-}, compared exactly.
inline bool variance_bound_holds(const ShapeConstants& c) {
  return c.k * (4 * c.ell - 1) < numerator_of(pow4(c.exponent()));
}

/// F_u = binom(2n - 2u ell + u, u) K^u Cat_{n - u ell + u c+} Cat_{n - u ell + u c-} / Cat_n^2,
/// the contribution of one unordered u-tuple class of pairwise non-overlapping
/// copies. Zero whenever an index is negative.
inline Rational non_overlapping_term(std::int64_t n, std::int64_t u, const ShapeConstants& c) {
  if (u < 0) throw std::invalid_argument("non_overlapping_term: u must be non-negative");
  const std::int64_t top = 2 * n - 2 * u * c.ell + u;
  const std::int64_t upper_index = n - u * c.ell + u * c.c_plus;
  const std::int64_t lower_index = n - u * c.ell + u * c.c_minus;
  if (top < 0 || upper_index < 0 || lower_index < 0) return 0;
  const BigInt ways = binomial(top, u);
  if (ways == 0) return 0;
  return Rational(ways * pow_int(c.k, static_cast<std::uint64_t>(u))) * catalan_ratio(upper_index, n) *
         catalan_ratio(lower_index, n);
}

/// E[(X_{S,n})_r] for a strong shape:
/// (2n - 2r ell + r)_r K^r Cat_{n - r ell + r c+} Cat_{n - r ell + r c-} / Cat_n^2.
inline Rational strong_factorial_moment(std::int64_t n, std::int64_t r, const ShapeConstants& c) {
  if (!c.strong)
    throw WeakShapeError(
        "the closed-form factorial moment holds only for strong shapes (no two copies can "
        "overlap); this shape has " +
        std::to_string(c.overlaps.size()) + " overlap offset(s)");
  if (r < 0) throw std::invalid_argument("strong_factorial_moment: r must be non-negative");
  if (r == 0) return 1;
  const std::int64_t top = 2 * n - 2 * r * c.ell + r;
  const std::int64_t upper_index = n - r * c.ell + r * c.c_plus;
  const std::int64_t lower_index = n - r * c.ell + r * c.c_minus;
  if (top < 0 || upper_index < 0 || lower_index < 0) return 0;
  return Rational(falling_factorial(BigInt(top), r) * pow_int(c.k, static_cast<std::uint64_t>(r))) *
         catalan_ratio(upper_index, n) * catalan_ratio(lower_index, n);
}

/// ln of strong_factorial_moment evaluated with log-gamma; usable at sizes
/// where the exact value is out of reach. Requires a positive moment.
inline double log_strong_factorial_moment(std::int64_t n, std::int64_t r, const ShapeConstants& c) {
  if (!c.strong) throw WeakShapeError("log_strong_factorial_moment: shape is weak");
  if (r == 0) return 0.0;
  const double top = static_cast<double>(2 * n - 2 * r * c.ell + r);
  const std::int64_t upper_index = n - r * c.ell + r * c.c_plus;
  const std::int64_t lower_index = n - r * c.ell + r * c.c_minus;
  if (top < static_cast<double>(r) || upper_index < 0 || lower_index < 0)
    throw std::domain_error("log_strong_factorial_moment: moment is zero");
  return log_falling_factorial(top, r) + static_cast<double>(r) * std::log(c.k.convert_to<double>()) +
         log_catalan(upper_index) + log_catalan(lower_index) - 2.0 * log_catalan(n);
}

/// ln of (2nK / 4^e)^r exp(-r^2 (4 ell - 1) / (4n) + r^2 sum(b) / (2n)).
inline double asymptotic_log_moment(std::int64_t n, std::int64_t r, const ShapeConstants& c) {
  if (r == 0) return 0.0;
  const double nd = static_cast<double>(n);
  const double rd = static_cast<double>(r);
  const double log_mean_rate = std::log(2.0 * nd) + std::log(c.k.convert_to<double>()) -
                               static_cast<double>(c.exponent()) * std::log(4.0);
  return rd * log_mean_rate - rd * rd * (4.0 * c.ell - 1.0) / (4.0 * nd) +
         rd * rd * to_double(c.overlap_sum()) / (2.0 * nd);
}

struct GaussianParams {
  Rational mu;
  Rational sigma2;
  double mu_real = 0;
  double sigma2_real = 0;
  double sigma_real = 0;
};

/// mu_S = 2K / 4^e and sigma_S^2 = mu_S (1 + (K / 4^e)(1 - 4 ell + 2 sum b_i)).
inline GaussianParams gaussian_params(const ShapeConstants& c) {
  const Rational density = Rational(c.k) / pow4(c.exponent());
  GaussianParams g;
  g.mu = 2 * density;
  g.sigma2 = g.mu * (1 + density * (1 - 4 * c.ell + 2 * c.overlap_sum()));
  g.mu_real = to_double(g.mu);
  g.sigma2_real = to_double(g.sigma2);
  g.sigma_real = std::sqrt(g.sigma2_real);
  return g;
}

/// The Gao-Wormald sequences mu_n = 2nK/4^e and s_n = (2 sum b - (4 ell - 1)) / (2n).
struct MomentSequence {
  double mu_n;
  double s_n;
};

inline MomentSequence moment_sequence(std::int64_t n, const ShapeConstants& c) {
  const double nd = static_cast<double>(n);
  return {2.0 * nd * to_double(Rational(c.k) / pow4(c.exponent())),
          (2.0 * to_double(c.overlap_sum()) - (4.0 * c.ell - 1.0)) / (2.0 * nd)};
}

struct GwReport {
  double mu_n = 0;
  double s_n = 0;
  double product = 0;  // mu_n s_n
  double sigma_n = 0;  // sqrt(mu_n + mu_n^2 s_n), NaN when the radicand is negative
  bool product_above_minus_one = false;
  bool sigma_small_vs_mu = false;      // sigma_n = o(mu_n)
  bool mu_small_vs_sigma_cubed = false;  // mu_n = o(sigma_n^3)

  bool all_hold() const { return product_above_minus_one && sigma_small_vs_mu && mu_small_vs_sigma_cubed; }
};

/// Checks the Gao-Wormald hypotheses for mu_n > 0 and s_n, reading the growth
/// conditions for the family mu_n = Theta(n), s_n = Theta(1/n): then mu_n s_n is
/// constant, sigma_n = Theta(sqrt n) iff 1 + mu_n s_n > 0, and both little-o
/// conditions follow. Violations are flagged, not thrown.
inline GwReport gao_wormald_check(double mu_n, double s_n) {
  if (!(mu_n > 0)) throw std::invalid_argument("gao_wormald_check: mu_n must be positive");
  GwReport r;
  r.mu_n = mu_n;
  r.s_n = s_n;
  r.product = mu_n * s_n;
  const double radicand = mu_n * (1.0 + r.product);
  r.sigma_n = radicand >= 0 ? std::sqrt(radicand) : std::nan("");
  r.product_above_minus_one = r.product > -1.0;
  r.sigma_small_vs_mu = r.product_above_minus_one;
  r.mu_small_vs_sigma_cubed = r.product_above_minus_one;
  return r;
}

struct TightnessProfile {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::vector<Rational> terms;  // terms[u-1] = B_{r,u}
  std::optional<Rational> min_ratio;  // min over u < r of B_{r,u+1} / B_{r,u}, where B_{r,u} > 0
};

/// B_{r,u} = binom(r-1, u-1) (2 ell)^{r-u} F_u for u = 1..r.
inline TightnessProfile tightness_profile(std::int64_t n, std::int64_t r, const ShapeConstants& c) {
  if (r < 1) throw std::invalid_argument("tightness_profile: r must be >= 1");
  if (r * r > n) throw std::invalid_argument("tightness_profile: requires r <= sqrt(n)");
  TightnessProfile p;
  p.n = n;
  p.r = r;
  for (std::int64_t u = 1; u <= r; ++u) {
    p.terms.push_back(Rational(binomial(r - 1, u - 1) *
                               pow_int(BigInt(2 * c.ell), static_cast<std::uint64_t>(r - u))) *
                      non_overlapping_term(n, u, c));
  }
  for (std::size_t u = 0; u + 1 < p.terms.size(); ++u) {
    if (p.terms[u] == 0) continue;
    const Rational ratio = p.terms[u + 1] / p.terms[u];
    if (!p.min_ratio || ratio < *p.min_ratio) p.min_ratio = ratio;
  }
  return p;
}

/// Largest Q with F_{u+1} / F_u >= Q n / u for every 1 <= u <= floor(sqrt n).
inline double fitted_ratio_constant(std::int64_t n, const ShapeConstants& c) {
  const auto umax = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  double q = INFINITY;
  Rational prev = non_overlapping_term(n, 1, c);
  for (std::int64_t u = 1; u <= umax; ++u) {
    const Rational next = non_overlapping_term(n, u + 1, c);
    if (prev == 0) return 0.0;
    q = std::min(q, to_double(next / prev) * static_cast<double>(u) / static_cast<double>(n));
    prev = next;
  }
  return q;
}

}  // namespace meander
