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

// Diagonal (eigenbasis) representation of Hamiltonians and input states.
// Every booster quantity depends only on the eigenvalues and on the input
// amplitudes in the eigenbasis, so eigenvectors never leave hamiltonian_io.

#include <complex>
#include <concepts>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "boosterforge/errors.hpp"

namespace boosterforge {

using Complex = std::complex<double>;

/// Absolute tolerance on sum |mu|^2 - 1 for a state to count as normalized.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Affine map between raw energies (e.g. Hartree) and the unit interval.
struct Rescaling {
  double lambda_min_raw = 0.0;
  double lambda_max_raw = 1.0;
  std::string units;

  double span() const { return lambda_max_raw - lambda_min_raw; }
  double to_raw(double x) const { return lambda_min_raw + x * span(); }
  /// Converts an energy difference (no offset).
  double interval_to_raw(double dx) const { return dx * span(); }
};

class SpectralHamiltonian {
 public:
  /// Eigenvalues must be ascending and lie in [0, 1].
  explicit SpectralHamiltonian(Eigen::VectorXd eigenvalues,
                               std::optional<Rescaling> rescaling = std::nullopt);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  Eigen::Index dimension() const { return eigenvalues_.size(); }
  double ground_energy() const { return eigenvalues_[0]; }
  /// eigenvalues[1] - eigenvalues[0]; zero for degenerate ground states.
  double gap() const;

  const std::optional<Rescaling>& rescaling() const { return rescaling_; }
  /// Raw-unit version of a rescaled energy (identity without metadata).
  double to_raw(double x) const { return rescaling_ ? rescaling_->to_raw(x) : x; }
  double interval_to_raw(double dx) const {
    return rescaling_ ? rescaling_->interval_to_raw(dx) : dx;
  }

 private:
  Eigen::VectorXd eigenvalues_;
  std::optional<Rescaling> rescaling_;
};

class EigenbasisState {
 public:
  enum class Normalization { kNormalized, kUnnormalized };

  /// With kNormalized the amplitudes must satisfy |sum |mu|^2 - 1| <= 1e-12.
  explicit EigenbasisState(Eigen::VectorXcd amplitudes,
                           Normalization normalization = Normalization::kNormalized);

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static EigenbasisState normalized(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  bool is_normalized() const { return normalization_ == Normalization::kNormalized; }
  double squared_norm() const { return amplitudes_.squaredNorm(); }

  /// gamma = |mu_1|, overlap with the lowest-index eigenstate.
  double ground_overlap() const { return std::abs(amplitudes_[0]); }

 private:
  Eigen::VectorXcd amplitudes_;
  Normalization normalization_;
};

/// (lambda - min) / (max - min). Input must be ascending with at least two
/// distinct values.
SpectralHamiltonian rescale_spectrum(std::span<const double> raw_eigenvalues,
                                     std::string units = "");

/// f(H)|psi> before normalization, with Z = sum |mu_j f(lambda_j)|^2.
struct BoostedAmplitudes {
  Eigen::VectorXcd amplitudes;
  double squared_norm = 0.0;

  /// mu_j f(lambda_j) / sqrt(Z).
  EigenbasisState normalized() const;
};

namespace detail {
void check_paired(const SpectralHamiltonian& h, Eigen::Index state_dimension);
}

/// Applies an arbitrary scalar function of H exactly in the eigenbasis.
template <typename Fn>
  requires std::is_invocable_r_v<Complex, const Fn&, double>
BoostedAmplitudes apply_function_exact(const Fn& f, const SpectralHamiltonian& h,
                                       const EigenbasisState& psi) {
  detail::check_paired(h, psi.dimension());
  BoostedAmplitudes out;
  out.amplitudes.resize(psi.dimension());
  for (Eigen::Index j = 0; j < psi.dimension(); ++j) {
    out.amplitudes[j] = psi.amplitudes()[j] * static_cast<Complex>(f(h.eigenvalues()[j]));
  }
  out.squared_norm = out.amplitudes.squaredNorm();
  if (!(out.squared_norm > 0.0)) {
    throw ZeroNormError("booster annihilates the whole support of the input state");
  }
  return out;
}

/// Sum_{lambda_j <= lambda} |a_j|^2 / sum_j |a_j|^2.
double overlap_leq(const Eigen::VectorXcd& amplitudes, const SpectralHamiltonian& h,
                   double lambda);

/// Sum_j lambda_j |a_j|^2 / sum_j |a_j|^2, in rescaled units.
double energy(const Eigen::VectorXcd& amplitudes, const SpectralHamiltonian& h);

/// A spectrum plus the input state, as read from a fixture file.
struct SpectralSystem {
  SpectralHamiltonian hamiltonian;
  EigenbasisState state;
};

/// Fixture text: one `<eigenvalue_raw> <Re(mu)> <Im(mu)>` per line, `#`
/// comments. Lines are sorted by eigenvalue and the amplitudes normalized.
SpectralSystem parse_spectrum_fixture(std::string_view text, std::string units = "");
SpectralSystem load_spectrum_fixture(const std::filesystem::path& path,
                                     std::string units = "");

/// Inverse of parse_spectrum_fixture, 17 significant digits per field.
std::string format_spectrum_fixture(std::span<const double> raw_eigenvalues,
                                    const Eigen::VectorXcd& amplitudes,
                                    std::string_view header_comment = "");

}  // namespace boosterforge
