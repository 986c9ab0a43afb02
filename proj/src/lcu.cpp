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

#include "boosterforge/lcu.hpp"

#include <cmath>
#include <numbers>

namespace boosterforge {

namespace {

using std::numbers::pi;

Complex unit_phase(Complex c) {
  const double r = std::abs(c);
  return r > 0.0 ? c / r : Complex(1.0);
}

void require_normalized(const SpectralHamiltonian& h, const EigenbasisState& psi) {
  detail::check_paired(h, psi.dimension());
  if (!psi.is_normalized()) throw DomainError("LCU input state must be normalized");
}

// V is the Householder reflection mapping e_0 to v; it is its own inverse.
struct Householder {
  Eigen::VectorXd w;
  double scale = 0.0;  // 2 / (w^T w), zero when V = I

  explicit Householder(const Eigen::VectorXd& v) : w(-v) {
    w[0] += 1.0;
    const double ww = w.squaredNorm();
    scale = ww > 0.0 ? 2.0 / ww : 0.0;
  }

  template <typename Derived>
  void apply(Eigen::MatrixBase<Derived>&& x) const {
    const Complex proj = w.cast<Complex>().dot(x);  // real w, so w^† x
    x -= (scale * proj) * w.cast<Complex>();
  }
};

}  // namespace

LcuOutcome simulate_lcu_terms(const LcuTerms& terms, const SpectralHamiltonian& h,
                              const EigenbasisState& psi, LcuMode mode) {
  require_normalized(h, psi);
  const Eigen::Index K = terms.size();
  if (K == 0 || terms.frequencies.size() != K) throw DomainError("LCU needs matching, non-empty terms");
  const double l1 = terms.l1();
  if (!(l1 > 0.0) || !std::isfinite(l1)) throw ConstructionError("LCU coefficients have zero or non-finite l1 norm");
  const Eigen::Index D = h.dimension();

  const bool joint = mode == LcuMode::kJointState ||
                     (mode == LcuMode::kAuto && K * D <= kJointStateLimit);
  LcuOutcome out;
  out.used_joint_state = joint;
  out.postselected.resize(D);

  if (joint) {
    const Eigen::VectorXd v = (terms.coefficients.cwiseAbs() / l1).cwiseSqrt();
    const Householder V(v);
    Eigen::MatrixXcd state(K, D);  // column j holds the ancilla register for |lambda_j>
    for (Eigen::Index j = 0; j < D; ++j) {
      state.col(j) = v.cast<Complex>() * psi.amplitudes()[j];
    }
    for (Eigen::Index j = 0; j < D; ++j) {
      const double lambda = h.eigenvalues()[j];
      for (Eigen::Index k = 0; k < K; ++k) {
        state(k, j) *= unit_phase(terms.coefficients[k]) *
                       std::polar(1.0, 2.0 * pi * lambda * terms.frequencies[k]);
      }
      V.apply(state.col(j));
    }
    out.joint_norm_squared = state.squaredNorm();
    out.postselected = state.row(0).transpose();
  } else {
    for (Eigen::Index j = 0; j < D; ++j) {
      out.postselected[j] = psi.amplitudes()[j] * terms.evaluate(h.eigenvalues()[j]) / l1;
    }
  }
  out.success_probability = out.postselected.squaredNorm();
  if (!(out.success_probability >= kUnderflowFloor)) {
    throw UnderflowError("post-selection probability below 1e-300: the booster is too aggressive "
                         "for this input state");
  }
  return out;
}

BoostReport simulate_lcu(const FourierApprox& approx, const SpectralHamiltonian& h,
                         const EigenbasisState& psi, LcuMode mode) {
  require_normalized(h, psi);
  const std::int64_t K = 2 * approx.N();
  const bool joint = mode == LcuMode::kJointState ||
                     (mode == LcuMode::kAuto && K * h.dimension() <= kJointStateLimit);

  LcuOutcome outcome;
  if (joint) {
    outcome = simulate_lcu_terms(approx.terms, h, psi, LcuMode::kJointState);
  } else {
    // Same contraction as simulate_lcu_terms, with the uniform-grid
    // recurrence in FourierApprox::evaluate instead of K exponentials.
    outcome.postselected.resize(h.dimension());
    for (Eigen::Index j = 0; j < h.dimension(); ++j) {
      outcome.postselected[j] = psi.amplitudes()[j] * approx.evaluate(h.eigenvalues()[j]) / approx.l1;
    }
    outcome.success_probability = outcome.postselected.squaredNorm();
    if (!(outcome.success_probability >= kUnderflowFloor)) {
      throw UnderflowError("post-selection probability below 1e-300: the booster is too aggressive "
                           "for this input state");
    }
  }

  const double ground_in = std::norm(psi.amplitudes()[0]);
  if (!(ground_in > 0.0)) throw ZeroNormError("input state has no ground-state overlap (gamma = 0)");

  BoostReport report{EigenbasisState::normalized(outcome.postselected)};
  report.success_probability = outcome.success_probability;
  const double ground_out = std::norm(report.boosted_state.amplitudes()[0]);
  report.overlap_ratio = ground_out / ground_in;
  report.infidelity = std::max(0.0, 1.0 - ground_out);
  report.energy_error =
      h.interval_to_raw(energy(report.boosted_state.amplitudes(), h) - h.ground_energy());
  const auto depth = depth_accounting(approx);
  report.depth_proxy = depth.depth_proxy;
  report.ancilla_count = depth.ancilla;
  report.ideal_success_probability = ideal_success_probability(approx.spec, h, psi);
  report.unit_norm_success_probability = outcome.success_probability * approx.l1 * approx.l1;
  report.joint_norm_squared = outcome.joint_norm_squared;
  report.used_joint_state = outcome.used_joint_state || joint;
  return report;
}

double ideal_success_probability(const BoosterSpec& spec, const SpectralHamiltonian& h,
                                 const EigenbasisState& psi) {
  if (spec.center != 0.0) {
    throw NotApplicableError("ideal success probability needs a real, non-negative fhat; "
                             "shifted boosters have complex transforms");
  }
  detail::check_paired(h, psi.dimension());
  const double f0 = std::abs(eval_f(spec, 0.0));
  double sum = 0.0;
  for (Eigen::Index j = 0; j < h.dimension(); ++j) {
    sum += std::norm(psi.amplitudes()[j]) * std::norm(eval_f(spec, h.eigenvalues()[j]));
  }
  return sum / (f0 * f0);
}

DepthAccounting depth_accounting(const FourierApprox& approx) {
  DepthAccounting d;
  d.depth_proxy = 2.0 * approx.T;
  d.ancilla = approx.n + 1;
  const double N = static_cast<double>(approx.N());
  d.accumulated_time = (4.0 * N - 2.0) * pi * approx.T / N;
  for (int p = 0; p <= approx.n; ++p) d.ladder_exponents.push_back(std::int64_t{2} << p);
  return d;
}

std::int64_t qpe_depth_comparison(double bits) {
  if (!std::isfinite(bits) || bits < 0.0 || bits > 60.0) throw DomainError("bits must lie in [0, 60]");
  return std::llround(std::exp2(bits + 1.0));
}

Eigen::MatrixXcd select_phase_table(const FourierApprox& approx, const SpectralHamiltonian& h) {
  const Eigen::Index K = approx.terms.size();
  Eigen::MatrixXcd table(K, h.dimension());
  for (Eigen::Index j = 0; j < h.dimension(); ++j) {
    for (Eigen::Index k = 0; k < K; ++k) {
      table(k, j) = unit_phase(approx.terms.coefficients[k]) *
                    std::polar(1.0, 2.0 * pi * h.eigenvalues()[j] * approx.terms.frequencies[k]);
    }
  }
  return table;
}

Eigen::MatrixXcd ladder_select_table(const FourierApprox& approx, const SpectralHamiltonian& h) {
  const Eigen::Index K = 2 * approx.N();
  const double N = static_cast<double>(approx.N());
  Eigen::MatrixXcd table = Eigen::MatrixXcd::Ones(K, h.dimension());
  for (Eigen::Index j = 0; j < h.dimension(); ++j) {
    const Complex U = std::polar(1.0, pi * h.eigenvalues()[j] * approx.T / N);
    for (int p = 0; p <= approx.n; ++p) {
      Complex gate = 1.0;
      for (std::int64_t r = 0; r < (std::int64_t{2} << p); ++r) gate *= U;
      for (Eigen::Index k = 0; k < K; ++k) {
        if ((k >> p) & 1) table(k, j) *= gate;
      }
    }
  }
  return table;
}

}  // namespace boosterforge
