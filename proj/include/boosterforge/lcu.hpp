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

// Statevector simulation of the prepare-select-unprepare circuit
//   <0|(V^† ⊗ I) O (V ⊗ I)|0>|psi> = A|psi> / l1,
// carried out in the eigenbasis of H, where O is diagonal.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "boosterforge/booster.hpp"
#include "boosterforge/spectrum.hpp"

namespace boosterforge {

/// Post-selection probabilities below this raise UnderflowError.
inline constexpr double kUnderflowFloor = 1e-300;

enum class LcuMode {
  kAuto,                // joint state when 2N * D <= kJointStateLimit
  kJointState,          // full (ancilla ⊗ system) amplitudes through V, O, V^†
  kPostselectedBranch,  // contract only the ancilla-|0> branch
};

inline constexpr std::int64_t kJointStateLimit = std::int64_t{1} << 22;

struct LcuOutcome {
  Eigen::VectorXcd postselected;  // mu_j f_{T,N}(lambda_j) / l1
  double success_probability = 0.0;
  double joint_norm_squared = 1.0;  // only meaningful in joint-state mode
  bool used_joint_state = false;
};

/// Simulates an arbitrary LCU sum_k c_k e^{i 2 pi H xi_k}. Phases of c_k go
/// into the select table; V|0> = (sqrt(|c_k| / l1))_k.
LcuOutcome simulate_lcu_terms(const LcuTerms& terms, const SpectralHamiltonian& h,
                              const EigenbasisState& psi, LcuMode mode = LcuMode::kAuto);

struct BoostReport {
  EigenbasisState boosted_state;
  double success_probability = 0.0;
  double overlap_ratio = 0.0;  // |<lambda_1|b>|^2 / gamma^2
  double infidelity = 0.0;     // 1 - |<lambda_1|b>|^2
  double energy_error = 0.0;   // <b|H|b> - lambda_1, raw units when available
  double depth_proxy = 0.0;    // 2T
  int ancilla_count = 0;       // n + 1
  double ideal_success_probability = 0.0;
  // ||f_{T,N}(H) psi||^2, i.e. the success probability if the LCU were
  // normalized by ∫|fhat| = f(0) = 1 instead of by l1.
  double unit_norm_success_probability = 0.0;
  double joint_norm_squared = 1.0;
  bool used_joint_state = false;
};

BoostReport simulate_lcu(const FourierApprox& approx, const SpectralHamiltonian& h,
                         const EigenbasisState& psi, LcuMode mode = LcuMode::kAuto);

/// sum_j |mu_j|^2 f(lambda_j)^2 / f(0)^2. Requires a real, even,
/// non-negative fhat, which excludes shifted boosters.
double ideal_success_probability(const BoosterSpec& spec, const SpectralHamiltonian& h,
                                 const EigenbasisState& psi);

struct DepthAccounting {
  double depth_proxy = 0.0;  // 2T controlled-e^{2 pi i H} applications
  int ancilla = 0;
  double accumulated_time = 0.0;  // (4N - 2) pi T / N
  std::vector<std::int64_t> ladder_exponents;  // U^2, U^4, ..., U^{2N}
};

DepthAccounting depth_accounting(const FourierApprox& approx);

/// 2^{q+1} applications of the controlled unitary for q bits of precision.
std::int64_t qpe_depth_comparison(double bits);

/// Select operation as a (2N x D) table: (c_k/|c_k|) e^{i 2 pi lambda_j xi_{k-N}}.
/// This already includes the global factor U^{-2N+1}.
Eigen::MatrixXcd select_phase_table(const FourierApprox& approx, const SpectralHamiltonian& h);

/// Product of the controlled ladder gates O_p = U^{2^{p+1}} (controlled on
/// ancilla bit p) for U = e^{i pi H T / N}, multiplied out gate by gate. The
/// global U^{-2N+1} is not applied.
Eigen::MatrixXcd ladder_select_table(const FourierApprox& approx, const SpectralHamiltonian& h);

}  // namespace boosterforge
