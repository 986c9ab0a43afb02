// Copyright 2026 The boosterforge Authors
//
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

// Error-function family accurate to a few ulps over the whole real line.
//
//   |x| < 3 : erf from the all-positive series
//             erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!
//   x >= 2  : erfc / erfcx from the Laplace continued fraction (modified Lentz)
//
// The series has no cancellation, so the only loss is the final product with
// e^{-x^2}. erfcx and log_erfc stay finite far past the point where erfc
// underflows, which the optimizers rely on.

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

namespace boosterforge::special {

namespace detail {

template <std::floating_point Real>
Real erf_series(Real x) {
  const Real x2 = x * x;
  Real term = x;
  Real sum = x;
  Real carry = 0;  // Kahan compensation
  for (int n = 1; n < 500; ++n) {
    term *= 2 * x2 / static_cast<Real>(2 * n + 1);
    const Real y = term - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * std::abs(sum) * Real(0.25)) break;
  }
  return 2 / std::sqrt(std::numbers::pi_v<Real>) * std::exp(-x2) * sum;
}

// e^{x^2} erfc(x) for x > 0 via
//   sqrt(pi) e^{x^2} erfc(x) = 1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...))))
template <std::floating_point Real>
Real erfcx_continued_fraction(Real x) {
  constexpr Real tiny = std::numeric_limits<Real>::min() * 16;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  Real f = x;
  Real c = f;
  Real d = 0;
  for (int k = 1; k < 5000; ++k) {
    const Real a = static_cast<Real>(k) / 2;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    const Real delta = c * d;
    f *= delta;
    if (std::abs(delta - 1) <= eps) break;
  }
  return 1 / (std::sqrt(std::numbers::pi_v<Real>) * f);
}

inline constexpr double kSeriesLimit = 3.0;
inline constexpr double kFractionLimit = 2.0;

}  // namespace detail

template <std::floating_point Real>
Real erf(Real x) {
  if (std::isnan(x)) return x;
  const Real ax = std::abs(x);
  if (ax < static_cast<Real>(detail::kSeriesLimit)) return detail::erf_series(x);
  const Real tail = std::exp(-ax * ax) * detail::erfcx_continued_fraction(ax);
  return std::copysign(1 - tail, x);
}

template <std::floating_point Real>
Real erfc(Real x) {
  if (std::isnan(x)) return x;
  if (x < static_cast<Real>(detail::kFractionLimit)) return 1 - erf(x);
  return std::exp(-x * x) * detail::erfcx_continued_fraction(x);
}

/// Scaled complementary error function e^{x^2} erfc(x).
template <std::floating_point Real>
Real erfcx(Real x) {
  if (std::isnan(x)) return x;
  if (x < static_cast<Real>(detail::kFractionLimit)) return std::exp(x * x) * erfc(x);
  return detail::erfcx_continued_fraction(x);
}

/// log(erfc(x)), finite for every x where erfc(x) > 0 mathematically.
template <std::floating_point Real>
Real log_erfc(Real x) {
  if (x < static_cast<Real>(detail::kFractionLimit)) return std::log(erfc(x));
  return -x * x + std::log(detail::erfcx_continued_fraction(x));
}

/// Inverse of erfc on (0, 2), by bisection. Tiny arguments are compared in
/// the log domain so y down to the smallest subnormal is resolved.
template <std::floating_point Real>
Real erfcinv(Real y) {
  if (!(y > 0) || !(y < 2)) return std::numeric_limits<Real>::quiet_NaN();
  if (y > 1) return -erfcinv(2 - y);
  if (y == 1) return 0;
  const Real target = std::log(y);
  Real lo = 0;
  Real hi = 1;
  while (log_erfc(hi) > target) hi *= 2;
  for (int it = 0; it < 400; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (log_erfc(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Inverse of erf on (-1, 1), by bisection on erf.
template <std::floating_point Real>
Real erfinv(Real y) {
  if (!(y > -1) || !(y < 1)) return std::numeric_limits<Real>::quiet_NaN();
  if (y < 0) return -erfinv(-y);
  if (y == 0) return 0;
  Real lo = 0;
  Real hi = 1;
  while (erf(hi) < y) hi *= 2;
  for (int it = 0; it < 400; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (erf(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace boosterforge::special
