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

#include "boosterforge/pauli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace boosterforge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Action of a single Pauli on bit value b: returns the flipped bit and the
// matrix element <out|P|b>.
struct PauliAction {
  bool flips;
  Complex element[2];
};

PauliAction action(char p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case 'I': return {false, {1.0, 1.0}};
    case 'Z': return {false, {1.0, -1.0}};
    case 'X': return {true, {1.0, 1.0}};
    case 'Y': return {true, {i, -i}};  // Y|0> = i|1>, Y|1> = -i|0>
  }
  throw DomainError(std::string("invalid Pauli letter '") + p + "'");
}

}  // namespace

std::vector<PauliTerm> parse_pauli_file(std::string_view text) {
  std::vector<PauliTerm> terms;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw ParseError(line_no, "expected '<coeff> <word>'");
    const std::string_view coeff_tok = line.substr(0, sep);
    const std::string_view word = trim(line.substr(sep));
    if (word.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(line_no, "expected '<coeff> <word>'");
    }

    double coeff = 0.0;
    const auto* end = coeff_tok.data() + coeff_tok.size();
    const auto [ptr, ec] = std::from_chars(coeff_tok.data(), end, coeff);
    if (ec != std::errc{} || ptr != end || !std::isfinite(coeff)) {
      throw ParseError(line_no, "malformed coefficient '" + std::string(coeff_tok) + "'");
    }
    for (const char c : word) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ParseError(line_no, std::string("invalid Pauli letter '") + c + "'");
      }
    }
    if (!terms.empty() && terms.front().word.size() != word.size()) {
      throw ParseError(line_no, "word length " + std::to_string(word.size()) +
                                    " differs from earlier terms (" +
                                    std::to_string(terms.front().word.size()) + ")");
    }
    terms.push_back({coeff, std::string(word)});
  }
  if (terms.empty()) throw ParseError(line_no, "no Pauli terms found");
  return terms;
}

Eigen::MatrixXcd build_dense(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) throw DomainError("empty Pauli sum");
  const int n = terms.front().qubits();
  if (n > kMaxDenseQubits) {
    throw SizeLimitError(std::to_string(n) + " qubits exceeds the dense limit of " +
                         std::to_string(kMaxDenseQubits) +
                         "; supply the spectrum directly with --spectrum instead");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : terms) {
    if (term.qubits() != n) throw DomainError("Pauli words have inconsistent lengths");
    // Each Pauli string is a signed permutation: column b has one nonzero.
    std::vector<PauliAction> acts;
    acts.reserve(static_cast<std::size_t>(n));
    for (const char c : term.word) acts.push_back(action(c));
    for (Eigen::Index b = 0; b < dim; ++b) {
      Eigen::Index out = b;
      Complex element = term.coefficient;
      for (int q = 0; q < n; ++q) {
        const int bit_pos = n - 1 - q;
        const int bit = static_cast<int>((b >> bit_pos) & 1);
        element *= acts[static_cast<std::size_t>(q)].element[bit];
        if (acts[static_cast<std::size_t>(q)].flips) out ^= Eigen::Index{1} << bit_pos;
      }
      m(out, b) += element;
    }
  }
  return m;
}

DiagonalizedHamiltonian diagonalize(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("matrix must be square and non-empty");
  if (!m.allFinite()) throw DomainError("matrix entries must be finite");
  const double scale = m.cwiseAbs().maxCoeff();
  const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-10 * (1.0 + scale)) throw DomainError("matrix is not Hermitian within 1e-10");

  const Eigen::MatrixXcd hermitian = 0.5 * (m + m.adjoint());
  JacobiEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  if (!solver.converged()) throw ConstructionError("Jacobi eigensolver did not converge in 100 sweeps");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXcd project_bitstring(const Eigen::MatrixXcd& eigenvectors,
                                   std::string_view bitstring) {
  const Eigen::Index dim = eigenvectors.rows();
  Eigen::Index index = 0;
  for (const char c : bitstring) {
    if (c != '0' && c != '1') throw DomainError("bitstring may contain only '0' and '1'");
    index = (index << 1) | (c == '1');
  }
  if ((Eigen::Index{1} << bitstring.size()) != dim) {
    throw DomainError("bitstring length does not match the qubit count");
  }
  return eigenvectors.row(index).adjoint();
}

SpectralSystem load_pauli_hamiltonian(const std::filesystem::path& path,
                                      std::string_view bitstring) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open Hamiltonian file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto terms = parse_pauli_file(buffer.str());
  const auto diag = diagonalize(build_dense(terms));
  const std::string bits = bitstring.empty()
                               ? std::string(static_cast<std::size_t>(terms.front().qubits()), '0')
                               : std::string(bitstring);
  const std::vector<double> raw(diag.eigenvalues.data(),
                                diag.eigenvalues.data() + diag.eigenvalues.size());
  return {rescale_spectrum(raw), EigenbasisState::normalized(project_bitstring(diag.eigenvectors, bits))};
}

}  // namespace boosterforge
