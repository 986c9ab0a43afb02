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

// T-sweeps over a spectral system: optimize a, pick n, simulate the LCU,
// and record the observables; plus the infidelity fit and CSV/SVG output.

#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boosterforge/booster.hpp"
#include "boosterforge/errors.hpp"
#include "boosterforge/spectrum.hpp"

namespace boosterforge {

enum class OptimizerKind { kConstrained, kSimplified };

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer(std::string_view name);

struct SweepConfig {
  BoosterFamily family = BoosterFamily::kGaussian;
  OptimizerKind optimizer = OptimizerKind::kSimplified;
  std::vector<double> t_values;
  double gap_derate = 0.8;
  std::optional<double> beta;    // weight-model decay, constrained optimizer only
  std::optional<double> lambda;  // overlap window; defaults to the derated gap
  double p0 = 0.25;
  double epsilon = 0.01;
  double eta = 1.0;
  int jobs = 1;

  void validate() const;
};

struct SweepRow {
  double T = 0.0;
  double a = 0.0;
  int n = 0;
  double overlap_ratio = 0.0;
  double energy_error_raw = 0.0;
  double p_succ_implemented = 0.0;
  double p_succ_ideal = 0.0;
  double tau = 0.0;
  double depth_proxy = 0.0;

  bool operator==(const SweepRow&) const = default;
};

/// Raised when some sweep points fail. Carries the rows that did complete
/// (sorted by T) and the first failure.
class SweepError : public Error {
 public:
  SweepError(std::vector<SweepRow> completed, std::exception_ptr cause, const std::string& what)
      : Error(what), completed_(std::move(completed)), cause_(std::move(cause)) {}

  const std::vector<SweepRow>& completed() const { return completed_; }
  const std::exception_ptr& cause() const { return cause_; }

 private:
  std::vector<SweepRow> completed_;
  std::exception_ptr cause_;
};

/// One point of the sweep; deterministic in its inputs.
SweepRow run_sweep_point(const SpectralSystem& system, const SweepConfig& config, double T);

/// Points run on up to `jobs` threads; rows come back sorted by T.
std::vector<SweepRow> run_sweep(const SpectralSystem& system, const SweepConfig& config);

struct FitOptions {
  // Rows outside [tau_min, tau_max] are excluded; tau must also lie in (0, 1).
  double tau_min = 0.0;
  double tau_max = 1.0;
};

struct FitResult {
  double p = 0.0;
  double q = 0.0;
  double r_squared = 0.0;
  std::size_t rows_used = 0;
  std::vector<std::string> warnings;
};

/// Least squares of T on ln(1/tau), read as T = p ln(q / tau).
FitResult fit_infidelity(const std::vector<SweepRow>& rows, FitOptions options = {});

inline constexpr std::string_view kSweepCsvHeader =
    "T,a,n,overlap_ratio,energy_error_raw,p_succ_implemented,p_succ_ideal,tau,depth_proxy";

std::string format_sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

struct EmitOptions {
  BoosterFamily family = BoosterFamily::kGaussian;
  double gamma_squared = 0.0;  // reference line on the success-probability plot
  int shape_points = 201;
};

/// Writes sweep.csv, overlap.svg, succprob.svg, infidelity.svg and one
/// booster_shape_T<k>.svg per row. Returns the paths written.
std::vector<std::filesystem::path> emit_outputs(const std::vector<SweepRow>& rows,
                                                const std::optional<FitResult>& fit,
                                                const std::filesystem::path& out_dir,
                                                const EmitOptions& options);

/// Writes only sweep.csv (used to flush partial results).
std::filesystem::path write_sweep_csv(const std::vector<SweepRow>& rows,
                                      const std::filesystem::path& out_dir);

/// Synthetic stand-in for the 12-qubit N2 system: 64 levels with ground
/// energy -108.98 Ha, a 0.021 Ha gap, a 10 Ha spread, ground amplitude 0.72
/// and excited weights decaying as e^{-0.1 j}.
struct RawSpectrum {
  std::vector<double> raw_eigenvalues;
  Eigen::VectorXcd amplitudes;
};
RawSpectrum n2_like_fixture();

}  // namespace boosterforge
