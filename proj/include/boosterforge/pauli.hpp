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

// Pauli-sum Hamiltonians at desk scale: parse, build the dense matrix,
// diagonalize, and project a computational-basis input state.

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "boosterforge/errors.hpp"
#include "boosterforge/spectrum.hpp"

namespace boosterforge {

inline constexpr int kMaxDenseQubits = 8;

struct PauliTerm {
  double coefficient = 0.0;
  std::string word;  // over {I, X, Y, Z}; leftmost letter acts on the most significant qubit

  int qubits() const { return static_cast<int>(word.size()); }
};

/// One `<coeff> <word>` per line, `#` comments. Terms keep file order.
std::vector<PauliTerm> parse_pauli_file(std::string_view text);

/// Sum of coeff * (P_1 ⊗ ... ⊗ P_n). Basis index bit (n-1-i) is qubit i of
/// the word, so "ZI" acts as Z on the high bit.
Eigen::MatrixXcd build_dense(const std::vector<PauliTerm>& terms);

/// Cyclic complex Jacobi eigensolver for Hermitian matrices, shaped after
/// Eigen's SelfAdjointEigenSolver. Sweeps until the off-diagonal Frobenius
/// norm is at most 1e-12 ||M||_F or 100 sweeps have run.
template <typename MatrixType>
class JacobiEigenSolver {
 public:
  using Scalar = typename MatrixType::Scalar;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  using RealVectorType = Eigen::Matrix<RealScalar, MatrixType::RowsAtCompileTime, 1>;
  using EigenvectorsType = MatrixType;

  static constexpr int kMaxSweeps = 100;

  JacobiEigenSolver() = default;
  explicit JacobiEigenSolver(const MatrixType& m) { compute(m); }

  JacobiEigenSolver& compute(const MatrixType& m);

  const RealVectorType& eigenvalues() const { return eigenvalues_; }
  const EigenvectorsType& eigenvectors() const { return eigenvectors_; }
  int sweeps() const { return sweeps_; }
  bool converged() const { return converged_; }

 private:
  RealVectorType eigenvalues_;
  EigenvectorsType eigenvectors_;
  int sweeps_ = 0;
  bool converged_ = false;
};

template <typename MatrixType>
JacobiEigenSolver<MatrixType>& JacobiEigenSolver<MatrixType>::compute(const MatrixType& m) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = m.rows();
  MatrixType a = m;
  MatrixType v = MatrixType::Identity(n, n);
  const RealScalar scale = m.norm();
  const RealScalar target = RealScalar(1e-12) * scale;

  auto off_norm = [&] {
    RealScalar s = 0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < n; ++p)
        if (p != q) s += Eigen::numext::abs2(a(p, q));
    return sqrt(s);
  };

  sweeps_ = 0;
  converged_ = off_norm() <= target;
  while (!converged_ && sweeps_ < kMaxSweeps) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const RealScalar r = abs(apq);
        if (r == RealScalar(0)) continue;
        // Rotate the (p, q) plane by G = D R with D = diag(1, conj(phase)),
        // which makes the pivot real, and R the classic real Jacobi rotation.
        const Scalar phase = apq / r;
        const RealScalar app = Eigen::numext::real(a(p, p));
        const RealScalar aqq = Eigen::numext::real(a(q, q));
        const RealScalar theta = (aqq - app) / (RealScalar(2) * r);
        const RealScalar t = (theta >= 0 ? RealScalar(1) : RealScalar(-1)) /
                             (abs(theta) + sqrt(theta * theta + RealScalar(1)));
        const RealScalar c = RealScalar(1) / sqrt(t * t + RealScalar(1));
        const RealScalar s = t * c;
        // Columns: new_p = c a_p - s conj(phase) a_q, new_q = s phase a_p + c a_q.
        const Scalar sp = s * phase;
        const Scalar spc = s * Eigen::numext::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - spc * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = spc * apk + c * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = Eigen::numext::real(a(p, p));
        a(q, q) = Eigen::numext::real(a(q, q));
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - spc * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
    }
    ++sweeps_;
    converged_ = off_norm() <= target;
  }

  // Sort ascending, permuting eigenvector columns along.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    return Eigen::numext::real(a(l, l)) < Eigen::numext::real(a(r, r));
  });
  eigenvalues_.resize(n);
  eigenvectors_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    eigenvalues_[k] = Eigen::numext::real(a(src, src));
    eigenvectors_.col(k) = v.col(src);
  }
  return *this;
}

struct DiagonalizedHamiltonian {
  Eigen::VectorXd eigenvalues;  // ascending, raw units
  Eigen::MatrixXcd eigenvectors;
};

/// Requires ||M - M^†||_max <= 1e-10 (1 + ||M||_max).
DiagonalizedHamiltonian diagonalize(const Eigen::MatrixXcd& m);

/// mu_j = <lambda_j | b> for the computational-basis state |b>, whose
/// leftmost character is the most significant qubit.
Eigen::VectorXcd project_bitstring(const Eigen::MatrixXcd& eigenvectors,
                                   std::string_view bitstring);

/// Parse, build, diagonalize, rescale and project in one step. The default
/// input is |0...0>.
SpectralSystem load_pauli_hamiltonian(const std::filesystem::path& path,
                                      std::string_view bitstring = {});

}  // namespace boosterforge
