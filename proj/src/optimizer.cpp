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

#include "boosterforge/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "boosterforge/special_functions.hpp"
#include "boosterforge/weight_model.hpp"

namespace boosterforge {

namespace {

using std::numbers::pi;

constexpr double kBisectionRelTol = 1e-10;
constexpr double kGoldenRelTol = 1e-8;
constexpr int kScanPoints = 2048;

// Largest a in [lo, hi] with feasible(a), assuming feasibility is lost
// monotonically as a grows. Returns the feasible end of the final interval.
template <typename Pred>
double bisect_feasible_log(const Pred& feasible, double lo, double hi) {
  if (feasible(hi)) return hi;
  double llo = std::log(lo);
  double lhi = std::log(hi);
  while (lhi - llo > kBisectionRelTol) {
    const double mid = 0.5 * (llo + lhi);
    (feasible(std::exp(mid)) ? llo : lhi) = mid;
  }
  return std::exp(llo);
}

double log_sum_exp(double x, double y) {
  const double m = std::max(x, y);
  if (m == -std::numeric_limits<double>::infinity()) return m;
  return m + std::log(std::exp(x - m) + std::exp(y - m));
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

BoosterSpec with_width(BoosterFamily family, double a) { return {family, a, 0.0}; }

}  // namespace

void OptimizationConstraints::validate() const {
  if (!(p0 > 0.0)) throw DomainError("p0 must be > 0");
  if (p0 > 1.0) throw InfeasibleError("p0 > 1 can never be met: success probabilities are at most 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be finite and > 0");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
  if (!(eta >= 1.0) || !std::isfinite(eta)) throw DomainError("eta must be finite and >= 1");
}

double choose_delta(double epsilon, double p0, double eta) {
  require_positive(epsilon, "epsilon");
  require_positive(p0, "p0");
  if (!(eta >= 1.0) || !std::isfinite(eta)) throw DomainError("eta must be finite and >= 1");
  const double x = epsilon * p0 * eta * eta;
  return x / (2.0 * (std::sqrt(x + 1.0) + 1.0));
}

ConstrainedSolution solve_gaussian_constrained(const OptimizationConstraints& c, double beta,
                                               double T) {
  c.validate();
  require_positive(beta, "beta");
  require_positive(T, "T");

  const auto success_ok = [&](double a) { return model_norm_gaussian(a, beta) >= c.p0; };
  const auto truncation_ok = [&](double a) {
    return special::erfc(pi * T / std::sqrt(a)) <= c.delta;
  };
  if (!success_ok(kMinWidth)) {
    throw InfeasibleError("success constraint p0 = " + std::to_string(c.p0) +
                          " is not met even at a = 1e-8");
  }
  if (!truncation_ok(kMinWidth)) {
    throw InfeasibleError("truncation constraint is not met even at a = 1e-8");
  }
  ConstrainedSolution s;
  s.a_success = bisect_feasible_log(success_ok, kMinWidth, kMaxWidth);
  s.a_truncation = bisect_feasible_log(truncation_ok, kMinWidth, kMaxWidth);
  s.a = std::min(s.a_success, s.a_truncation);
  s.objective = model_objective_gaussian(s.a, beta, c.lambda);
  return s;
}

ConstrainedSolution solve_constrained_grid(const BoosterSpec& family, const OptimizationConstraints& c,
                                           double beta, double T, int points) {
  c.validate();
  require_positive(beta, "beta");
  require_positive(T, "T");
  if (family.family == BoosterFamily::kIdentity) {
    throw NotApplicableError("the identity booster has no parameter to optimize");
  }
  if (points < 2) throw DomainError("grid needs at least two points");

  constexpr double kLo = 1e-4;
  constexpr double kHi = 1e8;
  ConstrainedSolution best;
  bool found = false;
  double last_success = 0.0;
  double last_truncation = 0.0;
  for (int i = 0; i < points; ++i) {
    const double a = kLo * std::pow(kHi / kLo, static_cast<double>(i) / (points - 1));
    const BoosterSpec spec = with_width(family.family, a);
    const double trunc = truncation_error_bound(spec, T);
    if (trunc <= c.delta) last_truncation = a;
    const double norm = model_norm(spec, beta);
    if (norm >= c.p0) last_success = a;
    if (trunc > c.delta || norm < c.p0) continue;
    const double objective = model_overlap(spec, beta, c.lambda) / norm;
    if (!found || objective > best.objective) {
      best.a = a;
      best.objective = objective;
      found = true;
    }
  }
  if (!found) throw InfeasibleError("no grid point satisfies both constraints");
  best.a_success = last_success;
  best.a_truncation = last_truncation;
  return best;
}

double log_simplified_objective(double a, double gap, double T) {
  return log_simplified_objective(BoosterFamily::kGaussian, a, gap, T);
}

double log_simplified_objective(BoosterFamily family, double a, double gap, double T) {
  require_positive(a, "a");
  require_positive(gap, "gap");
  require_positive(T, "T");
  switch (family) {
    case BoosterFamily::kGaussian:
      return log_sum_exp(-a * gap * gap, special::log_erfc(pi * T / std::sqrt(a)));
    case BoosterFamily::kHsec: {
      const double y = a * gap;
      const double log_f = -y + std::log(2.0) - std::log1p(std::exp(-2.0 * y));
      const double t = pi * pi * T / a;
      // log atan(e^{-t}) ~ -t - e^{-2t}/3 once e^{-t} is tiny.
      const double log_atan = t > 20.0 ? -t : std::log(std::atan(std::exp(-t)));
      return log_sum_exp(log_f, std::log(4.0 / pi) + log_atan);
    }
    case BoosterFamily::kExponential:
      return log_sum_exp(-a * gap, std::log(2.0 / pi * std::atan(a / (2.0 * pi * T))));
    case BoosterFamily::kIdentity: break;
  }
  throw NotApplicableError("the identity booster has no parameter to optimize");
}

double solve_simplified(double gap, double T) {
  return solve_simplified(BoosterFamily::kGaussian, gap, T);
}

double solve_simplified(BoosterFamily family, double gap, double T) {
  require_positive(gap, "gap");
  require_positive(T, "T");
  const auto g = [&](double log_a) { return log_simplified_objective(family, std::exp(log_a), gap, T); };

  double lo = std::log(1e-4);
  double hi = std::log(1e12);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<double> grid(kScanPoints);
    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScanPoints; ++i) {
      grid[i] = lo + (hi - lo) * i / (kScanPoints - 1);
      const double v = g(grid[i]);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    if (best == 0 || best == kScanPoints - 1) {
      lo -= std::log(1e4);
      hi += std::log(1e4);
      continue;
    }

    // Golden-section search on the two cells around the best scan point.
    constexpr double kInvPhi = 0.6180339887498949;
    double x0 = grid[best - 1];
    double x3 = grid[best + 1];
    double x1 = x3 - kInvPhi * (x3 - x0);
    double x2 = x0 + kInvPhi * (x3 - x0);
    double g1 = g(x1);
    double g2 = g(x2);
    while (x3 - x0 > kGoldenRelTol) {
      if (g1 <= g2) {
        x3 = x2;
        x2 = x1;
        g2 = g1;
        x1 = x3 - kInvPhi * (x3 - x0);
        g1 = g(x1);
      } else {
        x0 = x1;
        x1 = x2;
        g1 = g2;
        x2 = x0 + kInvPhi * (x3 - x0);
        g2 = g(x2);
      }
    }
    double x = 0.5 * (x0 + x3);
    // Never return something worse than the scan point itself.
    if (g(x) > best_value) x = grid[best];
    return std::exp(x);
  }
  throw ConstructionError("simplified objective has no interior minimum in a in [1e-12, 1e20]");
}

AsymptoticBounds asymptotic_bounds(const AsymptoticInputs& inp, double a) {
  require_positive(inp.gap, "gap");
  if (!(inp.gamma > 0.0 && inp.gamma <= 1.0)) throw DomainError("gamma must lie in (0, 1]");
  if (!(inp.T >= 0.0)) throw DomainError("T must be >= 0");
  require_positive(a, "a");
  return {2.0 * std::exp(-a * inp.gap * inp.gap) / inp.gamma,
          2.0 * special::erfc(pi * inp.T / std::sqrt(a)) / inp.gamma};
}

SufficientDepth sufficient_T(double gap, double gamma, double epsilon) {
  require_positive(gap, "gap");
  require_positive(epsilon, "epsilon");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in (0, 1]");

  const double target = gamma * epsilon / 4.0;  // per-term budget on e^{-a gap^2} and erfc
  if (target >= 1.0) return {0.0, kMinWidth};   // any state is already within epsilon

  SufficientDepth out;
  out.a = std::max(kMinWidth, std::log(1.0 / target) / (gap * gap));
  AsymptoticInputs inp{gap, gamma, 0.0, epsilon};
  for (int i = 0; i < 64 && asymptotic_bounds(inp, out.a).preparation > epsilon / 2.0; ++i) {
    out.a *= 1.0 + 8.0 * std::numeric_limits<double>::epsilon();
  }
  out.T = std::sqrt(out.a) / pi * special::erfcinv(target);
  inp.T = out.T;
  for (int i = 0; i < 64 && asymptotic_bounds(inp, out.a).truncation > epsilon / 2.0; ++i) {
    out.T *= 1.0 + 8.0 * std::numeric_limits<double>::epsilon();
    inp.T = out.T;
  }
  return out;
}

}  // namespace boosterforge
