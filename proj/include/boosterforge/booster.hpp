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

// Booster families f with analytic Fourier pairs
//   f(x) = ∫ fhat(xi) e^{i 2 pi x xi} dxi,
// the truncated/discretized approximation
//   f_{T,N}(x) = (T/N) sum_{j=-N}^{N-1} fhat(xi_j) e^{i 2 pi x xi_j},  xi_j = (j + 1/2) T/N,
// and the bounds on |f - f_T| and |f_T - f_{T,N}|.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "boosterforge/errors.hpp"
#include "boosterforge/spectrum.hpp"

namespace boosterforge {

enum class BoosterFamily { kGaussian, kHsec, kExponential, kIdentity };

std::string_view to_string(BoosterFamily family);
/// Accepts "gaussian", "hsec", "exponential", "identity".
BoosterFamily parse_family(std::string_view name);

struct BoosterSpec {
  BoosterFamily family = BoosterFamily::kGaussian;
  double a = 0.0;       // width (gaussian) or rate (hsec, exponential)
  double center = 0.0;  // excited-state shift; carried but must be zero

  static BoosterSpec gaussian(double a) { return {BoosterFamily::kGaussian, a, 0.0}; }
  static BoosterSpec hsec(double a) { return {BoosterFamily::kHsec, a, 0.0}; }
  static BoosterSpec exponential(double a) { return {BoosterFamily::kExponential, a, 0.0}; }
  static BoosterSpec identity() { return {BoosterFamily::kIdentity, 0.0, 0.0}; }
};

/// Throws DomainError for negative or non-finite a, a = 0 outside the
/// Gaussian family, or a nonzero center.
void validate(const BoosterSpec& spec);

/// gaussian e^{-a x^2}, hsec sech(a x), exponential e^{-a|x|}, identity 1.
Complex eval_f(const BoosterSpec& spec, double x);

/// gaussian sqrt(pi/a) e^{-(pi xi)^2/a}, hsec (pi/a) sech(pi^2 xi/a),
/// exponential 2a/(a^2 + 4 pi^2 xi^2). Identity and a = 0 have no
/// integrable transform and raise ConstructionError.
Complex eval_fhat(const BoosterSpec& spec, double xi);

/// d fhat / d xi for the same families.
Complex eval_fhat_derivative(const BoosterSpec& spec, double xi);

/// Exact diagonal application of f(H) to psi.
BoostedAmplitudes apply_booster_exact(const BoosterSpec& spec, const SpectralHamiltonian& h,
                                      const EigenbasisState& psi);

/// An arbitrary linear combination sum_k c_k e^{i 2 pi x xi_k}.
struct LcuTerms {
  Eigen::VectorXd frequencies;
  Eigen::VectorXcd coefficients;

  Eigen::Index size() const { return coefficients.size(); }
  double l1() const { return coefficients.cwiseAbs().sum(); }
  /// Direct summation, one complex exponential per term.
  Complex evaluate(double x) const;
};

struct FourierApprox {
  BoosterSpec spec;
  double T = 0.0;
  int n = 0;
  LcuTerms terms;  // index k = j + N, k in [0, 2N)
  double l1 = 0.0;

  std::int64_t N() const { return std::int64_t{1} << n; }
  double step() const { return T / static_cast<double>(N()); }
  double frequency(std::int64_t j) const { return (static_cast<double>(j) + 0.5) * step(); }

  /// f_{T,N}(x). Uses a blocked rotation recurrence re-anchored to exact
  /// exponentials every 128 terms; agrees with direct summation to ~1e-14.
  Complex evaluate(double x) const;
  Eigen::VectorXcd evaluate(const Eigen::VectorXd& x) const;
};

inline constexpr int kMaxFourierLevel = 24;

/// T > 0 and 0 <= n <= 24.
FourierApprox build_fourier_approx(const BoosterSpec& spec, double T, int n);

/// Upper bound on sup_x |f(x) - f_T(x)|, i.e. ∫_{|xi| > T} |fhat|.
double truncation_error_bound(const BoosterSpec& spec, double T);

/// (2 T^2 / N) R with R = max_{|xi| <= T} (|fhat| + |fhat'|); closed form for
/// the Gaussian, 4096-sample maximization otherwise.
double discretization_error_bound(const BoosterSpec& spec, double T, int n);

/// f_T(x) approximated by f_{T,N} with N = 2^16.
Complex eval_reference_fT(const BoosterSpec& spec, double T, double x);

/// Smallest n with discretization_error_bound <= delta / 2. Throws
/// SizeLimitError if that exceeds 24.
int choose_n(const BoosterSpec& spec, double T, double delta);

}  // namespace boosterforge
