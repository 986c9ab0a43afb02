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

#include "boosterforge/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

namespace boosterforge {

SpectralHamiltonian::SpectralHamiltonian(Eigen::VectorXd eigenvalues,
                                         std::optional<Rescaling> rescaling)
    : eigenvalues_(std::move(eigenvalues)), rescaling_(std::move(rescaling)) {
  if (eigenvalues_.size() == 0) throw DomainError("spectrum is empty");
  for (Eigen::Index j = 0; j < eigenvalues_.size(); ++j) {
    const double x = eigenvalues_[j];
    if (!(x >= 0.0 && x <= 1.0)) {
      throw DomainError("eigenvalue " + std::to_string(j) + " outside [0, 1]");
    }
    if (j > 0 && x < eigenvalues_[j - 1]) {
      throw DomainError("eigenvalues must be sorted ascending");
    }
  }
  if (rescaling_ && !(rescaling_->lambda_max_raw > rescaling_->lambda_min_raw)) {
    throw DomainError("rescaling requires lambda_max_raw > lambda_min_raw");
  }
}

double SpectralHamiltonian::gap() const {
  return eigenvalues_.size() < 2 ? 0.0 : eigenvalues_[1] - eigenvalues_[0];
}

EigenbasisState::EigenbasisState(Eigen::VectorXcd amplitudes, Normalization normalization)
    : amplitudes_(std::move(amplitudes)), normalization_(normalization) {
  if (amplitudes_.size() == 0) throw DomainError("state has no amplitudes");
  if (!amplitudes_.allFinite()) throw DomainError("state amplitudes must be finite");
  if (normalization_ == Normalization::kNormalized &&
      std::abs(amplitudes_.squaredNorm() - 1.0) > kNormalizationTolerance) {
    throw DomainError("state flagged normalized but sum |mu|^2 differs from 1 by more than 1e-12");
  }
}

EigenbasisState EigenbasisState::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ZeroNormError("cannot normalize a zero state");
  amplitudes /= norm;
  return EigenbasisState(std::move(amplitudes));
}

SpectralHamiltonian rescale_spectrum(std::span<const double> raw, std::string units) {
  if (raw.size() < 2) throw DegenerateSpectrumError("need at least two eigenvalues to rescale");
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!std::isfinite(raw[j])) throw DomainError("raw eigenvalues must be finite");
    if (j > 0 && raw[j] < raw[j - 1]) throw DomainError("raw eigenvalues must be sorted ascending");
  }
  const double lo = raw.front();
  const double hi = raw.back();
  if (!(hi > lo)) throw DegenerateSpectrumError("all eigenvalues are equal; rescaling is undefined");

  const double span = hi - lo;
  Eigen::VectorXd eigs(static_cast<Eigen::Index>(raw.size()));
  for (std::size_t j = 0; j < raw.size(); ++j) {
    eigs[static_cast<Eigen::Index>(j)] = std::clamp((raw[j] - lo) / span, 0.0, 1.0);
  }
  eigs[0] = 0.0;
  eigs[eigs.size() - 1] = 1.0;
  return SpectralHamiltonian(std::move(eigs), Rescaling{lo, hi, std::move(units)});
}

EigenbasisState BoostedAmplitudes::normalized() const {
  if (!(squared_norm > 0.0)) throw ZeroNormError("boosted state has zero norm");
  return EigenbasisState::normalized(amplitudes);
}

namespace detail {
void check_paired(const SpectralHamiltonian& h, Eigen::Index state_dimension) {
  if (h.dimension() != state_dimension) {
    throw DomainError("state dimension " + std::to_string(state_dimension) +
                      " does not match spectrum dimension " + std::to_string(h.dimension()));
  }
}
}  // namespace detail

double overlap_leq(const Eigen::VectorXcd& amplitudes, const SpectralHamiltonian& h,
                   double lambda) {
  detail::check_paired(h, amplitudes.size());
  double inside = 0.0;
  double total = 0.0;
  for (Eigen::Index j = 0; j < amplitudes.size(); ++j) {
    const double w = std::norm(amplitudes[j]);
    total += w;
    if (h.eigenvalues()[j] <= lambda) inside += w;
  }
  if (!(total > 0.0)) throw ZeroNormError("overlap of a zero-norm state");
  return inside / total;
}

double energy(const Eigen::VectorXcd& amplitudes, const SpectralHamiltonian& h) {
  detail::check_paired(h, amplitudes.size());
  const Eigen::VectorXd w = amplitudes.cwiseAbs2();
  const double total = w.sum();
  if (!(total > 0.0)) throw ZeroNormError("energy of a zero-norm state");
  return w.dot(h.eigenvalues()) / total;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SpectralSystem parse_spectrum_fixture(std::string_view text, std::string units) {
  struct Entry {
    double lambda;
    Complex mu;
  };
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto sep = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sep));
      line = sep == std::string_view::npos ? std::string_view{} : trim(line.substr(sep));
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected '<eigenvalue> <Re(mu)> <Im(mu)>'");
    }
    entries.push_back({parse_double(tokens[0], line_no),
                       Complex(parse_double(tokens[1], line_no), parse_double(tokens[2], line_no))});
  }
  if (entries.empty()) throw ParseError(line_no, "fixture contains no eigenstates");

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& l, const Entry& r) { return l.lambda < r.lambda; });
  std::vector<double> raw(entries.size());
  Eigen::VectorXcd mu(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t j = 0; j < entries.size(); ++j) {
    raw[j] = entries[j].lambda;
    mu[static_cast<Eigen::Index>(j)] = entries[j].mu;
  }
  return {rescale_spectrum(raw, std::move(units)), EigenbasisState::normalized(std::move(mu))};
}

SpectralSystem load_spectrum_fixture(const std::filesystem::path& path, std::string units) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open spectrum fixture '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spectrum_fixture(buffer.str(), std::move(units));
}

std::string format_spectrum_fixture(std::span<const double> raw_eigenvalues,
                                    const Eigen::VectorXcd& amplitudes,
                                    std::string_view header_comment) {
  if (static_cast<Eigen::Index>(raw_eigenvalues.size()) != amplitudes.size()) {
    throw DomainError("eigenvalue and amplitude counts differ");
  }
  std::string out;
  std::string_view rest = header_comment;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    out += "# ";
    out += rest.substr(0, nl);
    out += '\n';
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  }
  char buf[96];
  for (std::size_t j = 0; j < raw_eigenvalues.size(); ++j) {
    const Complex mu = amplitudes[static_cast<Eigen::Index>(j)];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", raw_eigenvalues[j], mu.real(), mu.imag());
    out += buf;
  }
  return out;
}

}  // namespace boosterforge
