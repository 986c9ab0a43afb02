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

#include "boosterforge/booster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "boosterforge/special_functions.hpp"

namespace boosterforge {

namespace {

using std::numbers::pi;

// sech without overflow in cosh.
double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

void require_transform(const BoosterSpec& spec) {
  validate(spec);
  if (spec.family == BoosterFamily::kIdentity || spec.a == 0.0) {
    throw ConstructionError("booster '" + std::string(to_string(spec.family)) +
                            "' with a = 0 has no integrable Fourier transform");
  }
}

// Phase recurrence block length between exact re-anchors.
constexpr std::int64_t kAnchorBlock = 128;

}  // namespace

std::string_view to_string(BoosterFamily family) {
  switch (family) {
    case BoosterFamily::kGaussian: return "gaussian";
    case BoosterFamily::kHsec: return "hsec";
    case BoosterFamily::kExponential: return "exponential";
    case BoosterFamily::kIdentity: return "identity";
  }
  return "unknown";
}

BoosterFamily parse_family(std::string_view name) {
  if (name == "gaussian") return BoosterFamily::kGaussian;
  if (name == "hsec") return BoosterFamily::kHsec;
  if (name == "exponential") return BoosterFamily::kExponential;
  if (name == "identity") return BoosterFamily::kIdentity;
  throw DomainError("unknown booster family '" + std::string(name) + "'");
}

void validate(const BoosterSpec& spec) {
  if (!std::isfinite(spec.a) || spec.a < 0.0) throw DomainError("booster parameter a must be finite and >= 0");
  if (spec.center != 0.0) throw DomainError("shifted boosters are not supported");
  if (spec.a == 0.0 && (spec.family == BoosterFamily::kHsec ||
                        spec.family == BoosterFamily::kExponential)) {
    throw DomainError("hsec and exponential boosters need a > 0");
  }
}

Complex eval_f(const BoosterSpec& spec, double x) {
  validate(spec);
  switch (spec.family) {
    case BoosterFamily::kGaussian: return std::exp(-spec.a * x * x);
    case BoosterFamily::kHsec: return sech(spec.a * x);
    case BoosterFamily::kExponential: return std::exp(-spec.a * std::abs(x));
    case BoosterFamily::kIdentity: return 1.0;
  }
  return 0.0;
}

Complex eval_fhat(const BoosterSpec& spec, double xi) {
  require_transform(spec);
  const double a = spec.a;
  switch (spec.family) {
    case BoosterFamily::kGaussian: return std::sqrt(pi / a) * std::exp(-(pi * xi) * (pi * xi) / a);
    case BoosterFamily::kHsec: return pi / a * sech(pi * pi * xi / a);
    case BoosterFamily::kExponential: return 2.0 * a / (a * a + 4.0 * pi * pi * xi * xi);
    case BoosterFamily::kIdentity: break;
  }
  throw ConstructionError("no Fourier transform for this family");
}

Complex eval_fhat_derivative(const BoosterSpec& spec, double xi) {
  require_transform(spec);
  const double a = spec.a;
  switch (spec.family) {
    case BoosterFamily::kGaussian:
      return -2.0 * pi * pi * xi / a * eval_fhat(spec, xi).real();
    case BoosterFamily::kHsec: {
      const double y = pi * pi * xi / a;
      return -(pi / a) * (pi * pi / a) * sech(y) * std::tanh(y);
    }
    case BoosterFamily::kExponential: {
      const double d = a * a + 4.0 * pi * pi * xi * xi;
      return -16.0 * a * pi * pi * xi / (d * d);
    }
    case BoosterFamily::kIdentity: break;
  }
  throw ConstructionError("no Fourier transform for this family");
}

BoostedAmplitudes apply_booster_exact(const BoosterSpec& spec, const SpectralHamiltonian& h,
                                      const EigenbasisState& psi) {
  validate(spec);
  return apply_function_exact([&](double x) { return eval_f(spec, x); }, h, psi);
}

Complex LcuTerms::evaluate(double x) const {
  Complex sum = 0.0;
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    sum += coefficients[k] * std::polar(1.0, 2.0 * pi * x * frequencies[k]);
  }
  return sum;
}

Complex FourierApprox::evaluate(double x) const {
  const std::int64_t count = 2 * N();
  const double h = step();
  const Complex rot = std::polar(1.0, 2.0 * pi * x * h);
  Complex total = 0.0;
  for (std::int64_t start = 0; start < count; start += kAnchorBlock) {
    const std::int64_t stop = std::min(count, start + kAnchorBlock);
    Complex phase = std::polar(1.0, 2.0 * pi * x * terms.frequencies[start]);
    Complex block = 0.0;
    for (std::int64_t k = start; k < stop; ++k) {
      block += terms.coefficients[k] * phase;
      phase *= rot;
    }
    total += block;
  }
  return total;
}

Eigen::VectorXcd FourierApprox::evaluate(const Eigen::VectorXd& x) const {
  Eigen::VectorXcd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = evaluate(x[i]);
  return out;
}

FourierApprox build_fourier_approx(const BoosterSpec& spec, double T, int n) {
  require_transform(spec);
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("T must be finite and > 0");
  if (n < 0 || n > kMaxFourierLevel) {
    throw SizeLimitError("n must lie in [0, " + std::to_string(kMaxFourierLevel) + "]");
  }
  FourierApprox approx;
  approx.spec = spec;
  approx.T = T;
  approx.n = n;
  const std::int64_t N = approx.N();
  const double h = approx.step();
  approx.terms.frequencies.resize(2 * N);
  approx.terms.coefficients.resize(2 * N);
  for (std::int64_t k = 0; k < 2 * N; ++k) {
    const double xi = approx.frequency(k - N);
    const Complex c = h * eval_fhat(spec, xi);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ConstructionError("non-finite Fourier coefficient at xi = " + std::to_string(xi));
    }
    approx.terms.frequencies[k] = xi;
    approx.terms.coefficients[k] = c;
  }
  approx.l1 = approx.terms.l1();
  return approx;
}

double truncation_error_bound(const BoosterSpec& spec, double T) {
  require_transform(spec);
  if (!(T >= 0.0)) throw DomainError("T must be >= 0");
  const double a = spec.a;
  switch (spec.family) {
    case BoosterFamily::kGaussian: return special::erfc(pi * T / std::sqrt(a));
    // 1 - (4/pi) atan(tanh(pi^2 T / (2a))), rewritten to avoid cancellation.
    case BoosterFamily::kHsec: return 4.0 / pi * std::atan(std::exp(-pi * pi * T / a));
    case BoosterFamily::kExponential:
      return T == 0.0 ? 1.0 : 2.0 / pi * std::atan(a / (2.0 * pi * T));
    case BoosterFamily::kIdentity: break;
  }
  throw ConstructionError("no Fourier transform for this family");
}

double discretization_error_bound(const BoosterSpec& spec, double T, int n) {
  require_transform(spec);
  if (!(T >= 0.0)) throw DomainError("T must be >= 0");
  if (n < 0) throw DomainError("n must be >= 0");
  const double a = spec.a;
  double R = 0.0;
  if (spec.family == BoosterFamily::kGaussian) {
    // max |fhat'| = sqrt(2) pi^{3/2} / (sqrt(e) a), attained at xi = sqrt(a/2)/pi.
    R = std::sqrt(pi / a) + std::sqrt(2.0) * std::pow(pi, 1.5) / (std::sqrt(std::numbers::e) * a);
  } else {
    constexpr int kSamples = 4096;
    for (int s = 0; s <= kSamples; ++s) {
      const double xi = -T + 2.0 * T * s / kSamples;
      R = std::max(R, std::abs(eval_fhat(spec, xi)) + std::abs(eval_fhat_derivative(spec, xi)));
    }
  }
  return 2.0 * T * T / std::ldexp(1.0, n) * R;
}

Complex eval_reference_fT(const BoosterSpec& spec, double T, double x) {
  return build_fourier_approx(spec, T, 16).evaluate(x);
}

int choose_n(const BoosterSpec& spec, double T, double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  for (int n = 0; n <= kMaxFourierLevel; ++n) {
    if (discretization_error_bound(spec, T, n) <= delta / 2.0) return n;
  }
  throw SizeLimitError("discretization error budget needs n > " + std::to_string(kMaxFourierLevel) +
                       " (2^25 LCU terms); relax delta or lower T");
}

}  // namespace boosterforge
