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

#include "boosterforge/weight_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "boosterforge/quadrature.hpp"
#include "boosterforge/special_functions.hpp"

namespace boosterforge {

namespace {

void check_args(double a, double beta) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("model integrals need a > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("model integrals need beta > 0");
}

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
}

// beta / (1 - e^{-beta}) without cancellation at small beta.
double normalizer(double beta) { return beta / -std::expm1(-beta); }

// normalizer * ∫_0^x e^{-2a t^2 - beta t} dt
//   = prefactor * (erfcx(u) - edge(x)),
// edge(x) = e^{-(2a x^2 + beta x)} erfcx(x sqrt(2a) + u), u = beta / sqrt(8a).
struct GaussianModelTerms {
  double prefactor;
  double u;
  double a;
  double beta;

  GaussianModelTerms(double a_, double beta_)
      : prefactor(std::sqrt(std::numbers::pi) * normalizer(beta_) / std::sqrt(8.0 * a_)),
        u(beta_ / std::sqrt(8.0 * a_)),
        a(a_),
        beta(beta_) {}

  double edge(double x) const {
    return std::exp(-(2.0 * a * x * x + beta * x)) * special::erfcx(x * std::sqrt(2.0 * a) + u);
  }
};

}  // namespace

WeightModel::WeightModel(double beta_) : beta(beta_) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("weight model needs beta > 0");
}

double WeightModel::density(double z) const { return normalizer(beta) * std::exp(-beta * z); }

double model_norm_gaussian(double a, double beta) {
  check_args(a, beta);
  const GaussianModelTerms g(a, beta);
  return g.prefactor * (special::erfcx(g.u) - g.edge(1.0));
}

double model_overlap_gaussian(double a, double beta, double lambda) {
  check_args(a, beta);
  check_lambda(lambda);
  const GaussianModelTerms g(a, beta);
  return g.prefactor * (special::erfcx(g.u) - g.edge(lambda));
}

double model_tail_gaussian(double a, double beta, double lambda) {
  check_args(a, beta);
  check_lambda(lambda);
  const GaussianModelTerms g(a, beta);
  return g.prefactor * (g.edge(lambda) - g.edge(1.0));
}

double model_objective_gaussian(double a, double beta, double lambda) {
  const double overlap = model_overlap_gaussian(a, beta, lambda);
  if (!(overlap > 0.0)) return 0.0;
  return 1.0 / (1.0 + model_tail_gaussian(a, beta, lambda) / overlap);
}

double model_norm_gaussian_naive(double a, double beta) {
  check_args(a, beta);
  const double u = beta / std::sqrt(8.0 * a);
  return std::sqrt(std::numbers::pi) * beta * std::exp(beta * beta / (8.0 * a)) /
         (std::sqrt(8.0 * a) * (1.0 - std::exp(-beta))) *
         (special::erf(std::sqrt(2.0 * a) + u) - special::erf(u));
}

double model_overlap_gaussian_naive(double a, double beta, double lambda) {
  check_args(a, beta);
  check_lambda(lambda);
  const double u = beta / std::sqrt(8.0 * a);
  return std::sqrt(std::numbers::pi) * beta * std::exp(beta * beta / (8.0 * a)) /
         (std::sqrt(8.0 * a) * (1.0 - std::exp(-beta))) *
         (special::erf(lambda * std::sqrt(2.0 * a) + u) - special::erf(u));
}

double model_norm(const BoosterSpec& spec, double beta) { return model_overlap(spec, beta, 1.0); }

double model_overlap(const BoosterSpec& spec, double beta, double lambda) {
  validate(spec);
  check_lambda(lambda);
  const WeightModel q(beta);
  const auto integrand = [&](double x) { return std::norm(eval_f(spec, x)) * q.density(x); };
  // Narrow boosters live on a length scale 1/a (1/sqrt(a) for the Gaussian);
  // integrating geometrically growing pieces keeps Simpson well resolved.
  double scale = 1.0;
  if (spec.a > 0.0) scale = spec.family == BoosterFamily::kGaussian ? 1.0 / std::sqrt(spec.a) : 1.0 / spec.a;
  double total = 0.0;
  double lo = 0.0;
  for (double hi = std::min(scale, lambda); lo < lambda; hi = std::min(4.0 * hi, lambda)) {
    total += integrate_simpson(integrand, lo, hi);
    lo = hi;
  }
  return total;
}

SpectralSystem sample_discrete_spectrum(const WeightModel& model, int levels, std::uint64_t seed,
                                        bool jitter) {
  if (levels < 2) throw DomainError("need at least two levels");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-0.4 / levels, 0.4 / levels);
  Eigen::VectorXd eigs(levels);
  Eigen::VectorXcd mu(levels);
  for (int j = 0; j < levels; ++j) {
    double x = static_cast<double>(j) / (levels - 1);
    if (jitter && j > 0 && j < levels - 1) x += offset(rng);
    eigs[j] = std::clamp(x, 0.0, 1.0);
    mu[j] = std::sqrt(model.density(eigs[j]));
  }
  return {SpectralHamiltonian(std::move(eigs)), EigenbasisState::normalized(std::move(mu))};
}

}  // namespace boosterforge
