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

#include "boosterforge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "boosterforge/lcu.hpp"
#include "boosterforge/optimizer.hpp"
#include "boosterforge/svg.hpp"

namespace boosterforge {

std::string_view to_string(OptimizerKind kind) {
  return kind == OptimizerKind::kConstrained ? "constrained" : "simplified";
}

OptimizerKind parse_optimizer(std::string_view name) {
  if (name == "constrained") return OptimizerKind::kConstrained;
  if (name == "simplified") return OptimizerKind::kSimplified;
  throw DomainError("unknown optimizer '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
  if (t_values.empty()) throw DomainError("the T list is empty");
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    if (!(t_values[i] > 0.0) || !std::isfinite(t_values[i])) throw DomainError("T values must be finite and > 0");
    if (i > 0 && !(t_values[i] > t_values[i - 1])) throw DomainError("T values must be strictly ascending");
  }
  if (!(gap_derate > 0.0 && gap_derate <= 1.0)) throw DomainError("gap derate must lie in (0, 1]");
  if (optimizer == OptimizerKind::kConstrained && family != BoosterFamily::kIdentity && !beta) {
    throw DomainError("the constrained optimizer needs a weight-model beta");
  }
  if (beta && !(*beta > 0.0)) throw DomainError("beta must be > 0");
  if (lambda && !(*lambda >= 0.0 && *lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
  if (!(p0 > 0.0 && p0 <= 1.0)) throw DomainError("p0 must lie in (0, 1]");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (!(eta >= 1.0)) throw DomainError("eta must be >= 1");
  if (jobs < 1) throw DomainError("jobs must be >= 1");
}

SweepRow run_sweep_point(const SpectralSystem& system, const SweepConfig& config, double T) {
  const auto& h = system.hamiltonian;
  const auto& psi = system.state;
  SweepRow row;
  row.T = T;
  row.depth_proxy = 2.0 * T;

  if (config.family == BoosterFamily::kIdentity) {
    LcuTerms one{Eigen::VectorXd::Zero(1), Eigen::VectorXcd::Ones(1)};
    const auto outcome = simulate_lcu_terms(one, h, psi);
    const auto b = EigenbasisState::normalized(outcome.postselected);
    const double ground = std::norm(b.amplitudes()[0]);
    row.overlap_ratio = ground / std::norm(psi.amplitudes()[0]);
    row.energy_error_raw = h.interval_to_raw(energy(b.amplitudes(), h) - h.ground_energy());
    row.p_succ_implemented = outcome.success_probability;
    row.p_succ_ideal = 1.0;
    row.tau = std::max(0.0, 1.0 - ground);
    return row;
  }

  const double gap = config.gap_derate * h.gap();
  if (!(gap > 0.0)) throw DegenerateSpectrumError("the ground state is degenerate; no gap to optimize for");
  const double delta = choose_delta(config.epsilon, config.p0, config.eta);

  if (config.optimizer == OptimizerKind::kSimplified) {
    row.a = solve_simplified(config.family, gap, T);
  } else {
    OptimizationConstraints c{config.p0, delta, config.lambda.value_or(gap), config.eta};
    row.a = config.family == BoosterFamily::kGaussian
                ? solve_gaussian_constrained(c, *config.beta, T).a
                : solve_constrained_grid(BoosterSpec{config.family, 1.0, 0.0}, c, *config.beta, T).a;
  }
  const BoosterSpec spec{config.family, row.a, 0.0};
  row.n = choose_n(spec, T, delta);
  const auto report = simulate_lcu(build_fourier_approx(spec, T, row.n), h, psi);
  row.overlap_ratio = report.overlap_ratio;
  row.energy_error_raw = report.energy_error;
  row.p_succ_implemented = report.success_probability;
  row.p_succ_ideal = report.ideal_success_probability;
  row.tau = report.infidelity;
  row.depth_proxy = report.depth_proxy;
  return row;
}

std::vector<SweepRow> run_sweep(const SpectralSystem& system, const SweepConfig& config) {
  config.validate();
  const std::size_t count = config.t_values.size();
  std::vector<std::optional<SweepRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = run_sweep_point(system, config, config.t_values[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<SweepRow> done;
  std::exception_ptr first;
  double first_T = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (rows[i]) done.push_back(*rows[i]);
    if (errors[i] && !first) {
      first = errors[i];
      first_T = config.t_values[i];
    }
  }
  std::sort(done.begin(), done.end(), [](const SweepRow& l, const SweepRow& r) { return l.T < r.T; });
  if (first) {
    std::string what = "sweep point T = " + std::to_string(first_T) + " failed";
    try {
      std::rethrow_exception(first);
    } catch (const std::exception& e) {
      what += ": ";
      what += e.what();
    } catch (...) {
    }
    throw SweepError(std::move(done), first, what);
  }
  return done;
}

FitResult fit_infidelity(const std::vector<SweepRow>& rows, FitOptions options) {
  FitResult fit;
  std::vector<double> x;  // ln(1/tau)
  std::vector<double> y;  // T
  for (const auto& r : rows) {
    if (!(r.tau > 0.0 && r.tau < 1.0) || r.tau < options.tau_min || r.tau > options.tau_max) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "excluding T = %g: tau = %.3g is outside the fit window", r.T, r.tau);
      fit.warnings.emplace_back(buf);
      continue;
    }
    x.push_back(-std::log(r.tau));
    y.push_back(r.T);
  }
  fit.rows_used = x.size();
  if (x.size() < 3) {
    throw InsufficientDataError("infidelity fit needs at least 3 rows with tau in the window, got " +
                                std::to_string(x.size()));
  }
  const double k = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / k;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / k;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("all fitted rows share the same tau");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  fit.p = slope;
  fit.q = std::exp(intercept / slope);
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_field(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "malformed number '" + std::string(tok) + "'");
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<double> column(const std::vector<SweepRow>& rows, double SweepRow::*field) {
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r.*field);
  return v;
}

std::string shape_name(double T) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "booster_shape_T%g.svg", T);
  return buf;
}

}  // namespace

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += g17(r.T) + ',' + g17(r.a) + ',' + std::to_string(r.n) + ',' + g17(r.overlap_ratio) + ',' +
           g17(r.energy_error_raw) + ',' + g17(r.p_succ_implemented) + ',' + g17(r.p_succ_ideal) + ',' +
           g17(r.tau) + ',' + g17(r.depth_proxy) + '\n';
  }
  return out;
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kSweepCsvHeader) throw ParseError(line_no, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> f;
    while (true) {
      const auto comma = line.find(',');
      f.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (f.size() != 9) throw ParseError(line_no, "expected 9 fields, got " + std::to_string(f.size()));
    SweepRow r;
    r.T = parse_field(f[0], line_no);
    r.a = parse_field(f[1], line_no);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), n);
    if (ec != std::errc{} || ptr != f[2].data() + f[2].size()) throw ParseError(line_no, "malformed n");
    r.n = n;
    r.overlap_ratio = parse_field(f[3], line_no);
    r.energy_error_raw = parse_field(f[4], line_no);
    r.p_succ_implemented = parse_field(f[5], line_no);
    r.p_succ_ideal = parse_field(f[6], line_no);
    r.tau = parse_field(f[7], line_no);
    r.depth_proxy = parse_field(f[8], line_no);
    rows.push_back(r);
  }
  if (!header_seen) throw ParseError(line_no, "CSV is empty");
  return rows;
}

std::filesystem::path write_sweep_csv(const std::vector<SweepRow>& rows,
                                      const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto path = out_dir / "sweep.csv";
  write_file(path, format_sweep_csv(rows));
  return path;
}

std::vector<std::filesystem::path> emit_outputs(const std::vector<SweepRow>& rows,
                                                const std::optional<FitResult>& fit,
                                                const std::filesystem::path& out_dir,
                                                const EmitOptions& options) {
  if (rows.empty()) throw DomainError("no sweep rows to emit");
  std::vector<std::filesystem::path> written{write_sweep_csv(rows, out_dir)};
  const auto Ts = column(rows, &SweepRow::T);

  svg::LinePlot overlap{"Ground-state overlap ratio", "T", "overlap ratio", false,
                        {{Ts, column(rows, &SweepRow::overlap_ratio), "overlap ratio", "#2ca02c"}},
                        {}};
  if (options.gamma_squared > 0.0) {
    overlap.reference_lines.push_back({1.0 / options.gamma_squared, "1/gamma^2"});
  }
  written.push_back(out_dir / "overlap.svg");
  write_file(written.back(), svg::render(overlap));

  svg::LinePlot succ{"Success probability", "T", "p_succ", false,
                     {{Ts, column(rows, &SweepRow::p_succ_implemented), "implemented", "#1f77b4"},
                      {Ts, column(rows, &SweepRow::p_succ_ideal), "ideal", "#ff7f0e", true}},
                     {}};
  if (options.gamma_squared > 0.0) succ.reference_lines.push_back({options.gamma_squared, "gamma^2"});
  written.push_back(out_dir / "succprob.svg");
  write_file(written.back(), svg::render(succ));

  svg::LinePlot infid{"Ground-state infidelity", "T", "tau", true,
                      {{Ts, column(rows, &SweepRow::tau), "tau", "#9467bd"}},
                      {}};
  if (fit) {
    std::vector<double> fx;
    std::vector<double> fy;
    for (int i = 0; i <= 100; ++i) {
      const double T = Ts.front() + (Ts.back() - Ts.front()) * i / 100.0;
      fx.push_back(T);
      fy.push_back(fit->q * std::exp(-T / fit->p));
    }
    char label[96];
    std::snprintf(label, sizeof label, "fit p=%.4g q=%.3g", fit->p, fit->q);
    infid.series.push_back({fx, fy, label, "#7f7f7f", true, false});
  }
  written.push_back(out_dir / "infidelity.svg");
  write_file(written.back(), svg::render(infid));

  for (const auto& r : rows) {
    if (options.family == BoosterFamily::kIdentity) break;
    const BoosterSpec spec{options.family, r.a, 0.0};
    const auto approx = build_fourier_approx(spec, r.T, r.n);
    // [0, 1] would render a near-delta at a ~ 1e6; zoom to where the
    // booster and its approximation actually differ.
    const double width = options.family == BoosterFamily::kGaussian ? std::sqrt(r.a) : r.a;
    const double window = std::min(1.0, std::max(4.0 / width, 3.0 / r.T));
    std::vector<double> xs;
    std::vector<double> ideal;
    std::vector<double> implemented;
    for (int i = 0; i < options.shape_points; ++i) {
      const double x = window * i / (options.shape_points - 1);
      xs.push_back(x);
      ideal.push_back(eval_f(spec, x).real());
      implemented.push_back(approx.evaluate(x).real());
    }
    char title[96];
    std::snprintf(title, sizeof title, "Booster at T = %g (a = %.4g, n = %d)", r.T, r.a, r.n);
    svg::LinePlot shape{title, "x", "f(x)", false,
                        {{xs, ideal, "ideal f", "#1f77b4", false, false},
                         {xs, implemented, "f_{T,N}", "#d62728", true, false}},
                        {}};
    written.push_back(out_dir / shape_name(r.T));
    write_file(written.back(), svg::render(shape));
  }
  return written;
}

RawSpectrum n2_like_fixture() {
  constexpr int kLevels = 64;
  constexpr double kGroundHa = -108.98;
  constexpr double kGapHa = 0.021;
  constexpr double kSpanHa = 10.0;
  constexpr double kGamma = 0.72;
  constexpr double kDecay = 0.1;

  const double gap = kGapHa / kSpanHa;
  RawSpectrum out;
  out.amplitudes.resize(kLevels);
  out.raw_eigenvalues.push_back(kGroundHa);
  out.amplitudes[0] = kGamma;
  double weight_sum = 0.0;
  for (int j = 1; j < kLevels; ++j) weight_sum += std::exp(-kDecay * (j - 1));
  const double excited_mass = 1.0 - kGamma * kGamma;
  for (int j = 1; j < kLevels; ++j) {
    const double x = gap + (1.0 - gap) * (j - 1) / (kLevels - 2);
    out.raw_eigenvalues.push_back(kGroundHa + kSpanHa * x);
    out.amplitudes[j] = std::sqrt(excited_mass * std::exp(-kDecay * (j - 1)) / weight_sum);
  }
  return out;
}

}  // namespace boosterforge
