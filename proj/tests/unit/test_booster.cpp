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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracles.hpp"
#include "boosterforge/booster.hpp"

using namespace boosterforge;
using std::numbers::pi;

TEST_CASE("eval_f") {
  CHECK(eval_f(BoosterSpec::gaussian(4.0), 0.0) == Complex(1.0));
  CHECK(eval_f(BoosterSpec::gaussian(4.0), 0.5).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(eval_f(BoosterSpec::hsec(2.0), 0.0) == Complex(1.0));
  CHECK(eval_f(BoosterSpec::hsec(2.0), 0.5).real() == doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-15));
  CHECK(eval_f(BoosterSpec::exponential(3.0), -0.5).real() == doctest::Approx(std::exp(-1.5)));
  CHECK(eval_f(BoosterSpec::identity(), 0.7) == Complex(1.0));
  CHECK(eval_f(BoosterSpec::hsec(1e6), 1.0).real() == 0.0);  // no overflow
  CHECK_THROWS_AS(eval_f(BoosterSpec::gaussian(-1.0), 0.0), DomainError);
  CHECK_THROWS_AS(eval_f(BoosterSpec{BoosterFamily::kGaussian, 1.0, 0.2}, 0.0), DomainError);
  CHECK(parse_family("hsec") == BoosterFamily::kHsec);
  CHECK_THROWS_AS(parse_family("lorentz"), DomainError);
}

TEST_CASE("eval_fhat closed forms") {
  CHECK(eval_fhat(BoosterSpec::gaussian(pi * pi), 0.0).real() == doctest::Approx(1.0 / std::sqrt(pi)));
  CHECK(eval_fhat(BoosterSpec::hsec(pi), 0.0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(eval_fhat(BoosterSpec::identity(), 0.0), ConstructionError);
  CHECK_THROWS_AS(eval_fhat(BoosterSpec::gaussian(0.0), 0.0), ConstructionError);
}

TEST_CASE("eval_fhat agrees with a numerical Fourier transform of f") {
  // fhat(xi) = ∫ f(x) cos(2 pi x xi) dx for even real f.
  struct Case {
    BoosterSpec spec;
    double xi;
    double half_width;
  };
  const Case cases[] = {
      {BoosterSpec::gaussian(1.0), 1.0, 12.0},  {BoosterSpec::gaussian(1.0), 0.3, 12.0},
      {BoosterSpec::gaussian(7.5), 0.8, 12.0},  {BoosterSpec::hsec(1.0), 0.0, 60.0},
      {BoosterSpec::hsec(2.0), 0.7, 40.0},      {BoosterSpec::exponential(2.0), 0.0, 30.0},
      {BoosterSpec::exponential(3.0), 1.1, 25.0},
  };
  for (const auto& c : cases) {
    const auto integrand = [&](long double x) {
      return static_cast<long double>(eval_f(c.spec, static_cast<double>(x)).real()) *
             std::cos(2.0L * std::numbers::pi_v<long double> * x * c.xi);
    };
    // The exponential kink sits at 0, so integrate the half line and double.
    const long double ref = 2.0L * oracle::simpson_converged(integrand, 0.0L, c.half_width);
    CHECK(std::abs(eval_fhat(c.spec, c.xi).real() - static_cast<double>(ref)) <= 1e-8);
  }
  CHECK(eval_fhat(BoosterSpec::gaussian(1.0), 1.0).real() ==
        doctest::Approx(std::sqrt(pi) * std::exp(-pi * pi)).epsilon(1e-14));
}

TEST_CASE("eval_fhat_derivative matches finite differences") {
  for (const auto& spec : {BoosterSpec::gaussian(3.0), BoosterSpec::hsec(2.0), BoosterSpec::exponential(1.5)}) {
    for (double xi : {-1.3, -0.2, 0.0, 0.4, 2.0}) {
      const double h = 1e-5;
      const double fd = (eval_fhat(spec, xi + h).real() - eval_fhat(spec, xi - h).real()) / (2 * h);
      CHECK(eval_fhat_derivative(spec, xi).real() == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("build_fourier_approx") {
  CHECK_THROWS_AS(build_fourier_approx(BoosterSpec::identity(), 5.0, 4), ConstructionError);
  CHECK_THROWS_AS(build_fourier_approx(BoosterSpec::gaussian(1.0), 0.0, 4), DomainError);
  CHECK_THROWS_AS(build_fourier_approx(BoosterSpec::gaussian(1.0), 1.0, 25), SizeLimitError);

  const auto g = build_fourier_approx(BoosterSpec::gaussian(4.0), 5.0, 6);
  CHECK(g.N() == 64);
  REQUIRE(g.terms.size() == 128);
  CHECK(std::abs(g.evaluate(0.0) - 1.0) <= 1e-3);
  CHECK(g.terms.coefficients.sum().real() == doctest::Approx(g.evaluate(0.0).real()).epsilon(1e-14));
  CHECK(g.l1 == doctest::Approx(g.evaluate(0.0).real()).epsilon(1e-14));
  for (Eigen::Index k = 0; k < g.terms.size(); ++k) {
    const Eigen::Index mirror = g.terms.size() - 1 - k;
    CHECK(g.terms.coefficients[k].imag() == 0.0);
    CHECK(g.terms.coefficients[k].real() > 0.0);
    CHECK(g.terms.coefficients[k] == g.terms.coefficients[mirror]);
    CHECK(g.terms.frequencies[k] == -g.terms.frequencies[mirror]);
  }
  CHECK(g.terms.frequencies[64] == doctest::Approx(0.5 * 5.0 / 64));
}

TEST_CASE("blocked evaluation agrees with direct summation") {
  const auto approx = build_fourier_approx(BoosterSpec::hsec(40.0), 80.0, 12);
  for (double x : {0.0, 0.013, 0.37, 0.999}) {
    const Complex direct = approx.terms.evaluate(x);
    const Complex ref = oracle::lcu_direct(approx.terms.frequencies, approx.terms.coefficients, x);
    CHECK(std::abs(approx.evaluate(x) - ref) <= 1e-13);
    CHECK(std::abs(direct - ref) <= 1e-12);
  }
}

TEST_CASE("Gaussian f_{T,N} is real on real inputs") {
  const auto approx = build_fourier_approx(BoosterSpec::gaussian(50.0), 12.0, 9);
  for (int i = 0; i <= 200; ++i) CHECK(std::abs(approx.evaluate(i / 200.0).imag()) <= 1e-12);
}

TEST_CASE("truncation_error_bound") {
  CHECK(truncation_error_bound(BoosterSpec::gaussian(pi * pi), 1.0) ==
        doctest::Approx(static_cast<double>(1.0L - oracle::erf(1.0L))).epsilon(1e-13));
  CHECK(truncation_error_bound(BoosterSpec::gaussian(pi * pi), 1.0) == doctest::Approx(0.15730).epsilon(1e-4));
  CHECK(truncation_error_bound(BoosterSpec::gaussian(1e6), 500.0) ==
        doctest::Approx(static_cast<double>(1.0L - oracle::erf(std::numbers::pi_v<long double> / 2))).epsilon(1e-12));
  CHECK(truncation_error_bound(BoosterSpec::gaussian(1e6), 500.0) == doctest::Approx(0.0264).epsilon(1e-2));
  for (const auto& spec : {BoosterSpec::gaussian(2.0), BoosterSpec::hsec(2.0), BoosterSpec::exponential(2.0)}) {
    CHECK(truncation_error_bound(spec, 1e9) < 1e-9);
    CHECK(truncation_error_bound(spec, 0.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("hsec and exponential tail closed forms match quadrature of |fhat|") {
  for (const auto& spec : {BoosterSpec::hsec(0.7), BoosterSpec::hsec(3.0), BoosterSpec::hsec(40.0)}) {
    for (double T : {0.05, 0.4, 2.0}) {
      const auto integrand = [&](long double xi) {
        return static_cast<long double>(eval_fhat(spec, static_cast<double>(xi)).real());
      };
      const long double tail = 2.0L * oracle::simpson_converged(integrand, T, T + 60.0L * spec.a / (pi * pi));
      CHECK(std::abs(truncation_error_bound(spec, T) - static_cast<double>(tail)) <= 1e-10);
      // The naive (cancelling) expression agrees where it is accurate.
      CHECK(truncation_error_bound(spec, T) ==
            doctest::Approx(1.0 - 4.0 / pi * std::atan(std::tanh(pi * pi * T / (2 * spec.a)))).epsilon(1e-9));
    }
  }
  for (const auto& spec : {BoosterSpec::exponential(0.5), BoosterSpec::exponential(5.0)}) {
    for (double T : {0.1, 1.0, 4.0}) {
      // Substitute xi = T / s to map the slow 1/xi^2 tail onto (0, 1].
      const auto integrand = [&](long double s) {
        if (s == 0.0L) return static_cast<long double>(2.0 * spec.a / (4.0 * pi * pi)) * T / (T * T);
        const double xi = static_cast<double>(T / s);
        return static_cast<long double>(eval_fhat(spec, xi).real()) * T / (s * s);
      };
      const long double tail = 2.0L * oracle::simpson_converged(integrand, 0.0L, 1.0L);
      CHECK(std::abs(truncation_error_bound(spec, T) - static_cast<double>(tail)) <= 1e-9);
      CHECK(truncation_error_bound(spec, T) ==
            doctest::Approx(1.0 - 2.0 / pi * std::atan(2 * pi * T / spec.a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Gaussian truncation bound is increasing in a and decreasing in T") {
  double prev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = std::pow(10.0, -1.0 + 8.0 * i / 199);
    const double v = truncation_error_bound(BoosterSpec::gaussian(a), 50.0);
    CHECK(v >= prev);
    prev = v;
  }
  prev = 2.0;
  for (int i = 0; i < 100; ++i) {
    const double v = truncation_error_bound(BoosterSpec::gaussian(1e4), 1.0 + i);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("discretization_error_bound") {
  const auto g = BoosterSpec::gaussian(pi * pi);
  const double expected = 2.0 / 1024.0 * (1.0 / std::sqrt(pi) + std::sqrt(2.0) / (std::sqrt(std::numbers::e) * std::sqrt(pi)));
  CHECK(discretization_error_bound(g, 1.0, 10) == doctest::Approx(expected).epsilon(1e-14));
  for (const auto& spec : {g, BoosterSpec::hsec(3.0), BoosterSpec::exponential(2.0)}) {
    CHECK(discretization_error_bound(spec, 2.0, 7) == doctest::Approx(2.0 * discretization_error_bound(spec, 2.0, 8)).epsilon(1e-15));
    CHECK(discretization_error_bound(spec, 1e-9, 4) < 1e-15);
  }

  // Measured |f_T - f_{T,N}| against the N = 2^16 reference.
  const auto approx = build_fourier_approx(g, 1.0, 10);
  const auto reference = build_fourier_approx(g, 1.0, 16);
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = i / 2000.0;
    worst = std::max(worst, std::abs(approx.evaluate(x) - reference.evaluate(x)));
  }
  CHECK(worst <= expected);
}

TEST_CASE("Gaussian R closed form bounds the sampled maximum") {
  for (double a : {0.3, 1.0, 40.0, 1e4}) {
    const auto spec = BoosterSpec::gaussian(a);
    double sampled = 0.0;
    for (int s = 0; s <= 20000; ++s) {
      const double xi = 200.0 * s / 20000;
      sampled = std::max(sampled, eval_fhat(spec, xi).real() + std::abs(eval_fhat_derivative(spec, xi).real()));
    }
    const double closed = discretization_error_bound(spec, 1.0, 1) / 1.0;  // (2/2) R
    CHECK(closed >= sampled * (1 - 1e-12));
    CHECK(closed <= 2.0 * sampled);
  }
}

TEST_CASE("eval_reference_fT") {
  CHECK(std::abs(eval_reference_fT(BoosterSpec::gaussian(1.0), 20.0, 0.3) - std::exp(-0.09)) <= 1e-6);
  for (double a : {1.0, 10.0, 50.0}) {
    for (double T : {10.0, 20.0}) {
      CHECK(std::abs(eval_reference_fT(BoosterSpec::gaussian(a), T, 0.0) - 1.0) <= 1e-6);
    }
  }
  // f_T(0) = erf(pi T / sqrt a) exactly; at a = 100, T = 10 this is 1 - 8.9e-6.
  const double corner = eval_reference_fT(BoosterSpec::gaussian(100.0), 10.0, 0.0).real();
  CHECK(corner == doctest::Approx(static_cast<double>(oracle::erf(std::numbers::pi_v<long double>))).epsilon(1e-9));
  const double small_T = eval_reference_fT(BoosterSpec::gaussian(1.0), 0.1, 0.0).real();
  CHECK(small_T == doctest::Approx(static_cast<double>(oracle::erf(0.1L * std::numbers::pi_v<long double>))).epsilon(1e-9));
  CHECK(small_T < 0.35);
}

TEST_CASE("combined bound holds on random (family, a, T, n)") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BoosterFamily family = trial % 3 == 0 ? BoosterFamily::kGaussian
                                 : trial % 3 == 1 ? BoosterFamily::kHsec
                                                  : BoosterFamily::kExponential;
    const BoosterSpec spec{family, std::pow(10.0, -0.3 + 3.3 * u(rng)), 0.0};
    const double T = 1.0 + 60.0 * u(rng);
    const int n = 5 + static_cast<int>(6 * u(rng));
    const auto approx = build_fourier_approx(spec, T, n);
    const double bound = truncation_error_bound(spec, T) + discretization_error_bound(spec, T, n);
    for (int i = 0; i <= 2000; ++i) {
      const double x = i / 2000.0;
      if (std::abs(eval_f(spec, x) - approx.evaluate(x)) > bound) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("choose_n") {
  const auto spec = BoosterSpec::gaussian(1e6);
  const double delta = 6.25e-4;
  const int n = choose_n(spec, 500.0, delta);
  CHECK(discretization_error_bound(spec, 500.0, n) <= delta / 2);
  CHECK(discretization_error_bound(spec, 500.0, n - 1) > delta / 2);
  CHECK_THROWS_AS(choose_n(BoosterSpec::gaussian(1.0), 1000.0, 1e-12), SizeLimitError);
  CHECK_THROWS_AS(choose_n(spec, 10.0, 0.0), DomainError);
}
