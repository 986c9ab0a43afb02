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

// One-parameter booster selection: the constrained model problem, the
// simplified bound-balancing objective, the implementation-error budget,
// and the gap/overlap asymptotics.

#include "boosterforge/booster.hpp"

namespace boosterforge {

struct OptimizationConstraints {
  double p0 = 0.25;     // minimum success probability, in (0, 1]
  double delta = 1e-3;  // implementation-error budget
  double lambda = 0.0;  // energy window for the overlap objective, in [0, 1]
  double eta = 1.0;     // lower bound on ∫|fhat|

  void validate() const;
};

struct AsymptoticInputs {
  double gap = 0.0;    // Delta, rescaled
  double gamma = 1.0;  // |<lambda_1|psi>|
  double T = 0.0;
  double epsilon = 0.0;
};

/// Search bracket for every a-solver.
inline constexpr double kMinWidth = 1e-8;
inline constexpr double kMaxWidth = 1e12;

/// delta with 4 delta (1 + delta) / (p0 eta^2) = epsilon, i.e.
/// (sqrt(epsilon p0 eta^2 + 1) - 1) / 2, evaluated without cancellation.
double choose_delta(double epsilon, double p0, double eta = 1.0);

struct ConstrainedSolution {
  double a = 0.0;
  double a_success = 0.0;     // largest a meeting the success constraint
  double a_truncation = 0.0;  // largest a meeting the truncation constraint
  double objective = 0.0;     // model overlap ratio at a
};

/// Maximizes the model overlap ratio subject to model_norm >= p0 and
/// erfc(pi T / sqrt a) <= delta. Both constraints cap a and the objective
/// increases with a, so the answer is min(a_success, a_truncation), each
/// root found by log-space bisection. A constraint that never binds inside
/// the bracket contributes the bracket's upper end.
ConstrainedSolution solve_gaussian_constrained(const OptimizationConstraints& c, double beta,
                                               double T);

/// Family-generic variant: feasibility-filtered scan of 10^4 log-spaced a in
/// [1e-4, 1e8] using quadrature model integrals and the family truncation
/// bound. Ties go to the smallest a.
ConstrainedSolution solve_constrained_grid(const BoosterSpec& family, const OptimizationConstraints& c,
                                           double beta, double T, int points = 10000);

/// log(e^{-a Delta^2} + erfc(pi T / sqrt a)); its minimizer is the
/// minimizer of e^{-a Delta^2} - erf(pi T / sqrt a).
double log_simplified_objective(double a, double gap, double T);

/// Same construction for other families: log(|f(Delta)| + truncation bound).
double log_simplified_objective(BoosterFamily family, double a, double gap, double T);

/// Minimizer over log a in [1e-4, 1e12]. The objective can have two local
/// minima, so a 2048-point log scan picks the basin before golden-section
/// refinement to relative 1e-8. A minimum on the bracket edge widens the
/// bracket (twice) and then raises ConstructionError.
double solve_simplified(double gap, double T);
double solve_simplified(BoosterFamily family, double gap, double T);

struct AsymptoticBounds {
  double preparation = 0.0;  // 2 e^{-a Delta^2} / gamma
  double truncation = 0.0;   // 2 erfc(pi T / sqrt a) / gamma
  double total() const { return preparation + truncation; }
};

AsymptoticBounds asymptotic_bounds(const AsymptoticInputs& inp, double a);

struct SufficientDepth {
  double T = 0.0;
  double a = 0.0;
};

/// a = ln(4 / (gamma epsilon)) / Delta^2, T = (sqrt(a) / pi) erfcinv(gamma epsilon / 4),
/// nudged upward until both asymptotic bounds are <= epsilon / 2.
SufficientDepth sufficient_T(double gap, double gamma, double epsilon);

}  // namespace boosterforge
