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

// Continuous surrogate for the input state's spectral weight,
//   q(z) = beta e^{-beta z} / (1 - e^{-beta})  on [0, 1],
// and the boosted norm / windowed overlap it predicts.

#include <cstdint>

#include "boosterforge/booster.hpp"
#include "boosterforge/spectrum.hpp"

namespace boosterforge {

struct WeightModel {
  double beta = 1.0;

  explicit WeightModel(double beta);
  double density(double z) const;
};

/// (beta / (1 - e^{-beta})) ∫_0^1 e^{-2a x^2 - beta x} dx in closed form.
/// Evaluated through erfcx at every a, which avoids both the e^{beta^2/8a}
/// overflow and the erf-difference cancellation.
double model_norm_gaussian(double a, double beta);

/// Same integral over [0, lambda].
double model_overlap_gaussian(double a, double beta, double lambda);

/// The complementary integral over (lambda, 1].
double model_tail_gaussian(double a, double beta, double lambda);

/// overlap / norm, computed as 1 / (1 + tail / overlap).
double model_objective_gaussian(double a, double beta, double lambda);

/// The literal erf-difference forms, kept for cross-checks; they lose
/// accuracy as beta^2 / 8a grows or a shrinks.
double model_norm_gaussian_naive(double a, double beta);
double model_overlap_gaussian_naive(double a, double beta, double lambda);

/// Family-generic versions by Simpson quadrature of |f|^2 q.
double model_norm(const BoosterSpec& spec, double beta);
double model_overlap(const BoosterSpec& spec, double beta, double lambda);

/// Levels at j / (levels - 1), amplitudes proportional to sqrt(q(lambda_j)).
/// With jitter, interior levels move by U(-0.4, 0.4) / levels drawn from
/// mt19937_64(seed).
SpectralSystem sample_discrete_spectrum(const WeightModel& model, int levels, std::uint64_t seed,
                                        bool jitter = true);

}  // namespace boosterforge
