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

// Acceptance suite. Each criterion prints one PASS/FAIL line; `--only k`
// runs a single criterion (that is how ctest drives it).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boosterforge/boosterforge.hpp"
#include "oracles.hpp"

namespace bf = boosterforge;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

bf::EigenbasisState random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(dim);
  for (auto& z : v) z = {g(rng), g(rng)};
  return bf::EigenbasisState(v.normalized());
}

Eigen::VectorXd random_levels(std::mt19937_64& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd x(dim);
  for (auto& e : x) e = u(rng);
  std::sort(x.begin(), x.end());
  x[0] = 0.0;
  return x;
}

// ---------------------------------------------------------------- C1 / C2

struct LcuCase {
  bf::BoosterSpec spec;
  double T = 0.0;
  int n = 0;
  Eigen::VectorXd levels;
  Eigen::VectorXcd amplitudes;
};

std::vector<LcuCase> lcu_cases() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 64), level(6, 10);
  std::uniform_real_distribution<double> T(5.0, 100.0);
  std::vector<LcuCase> cases;
  for (int k = 0; k < 120; ++k) {
    LcuCase c;
    const double a = log_uniform(rng, 0.5, 1e4);
    c.spec = k % 2 ? bf::BoosterSpec::hsec(a) : bf::BoosterSpec::gaussian(a);
    c.T = T(rng);
    c.n = level(rng);
    const int d = dim(rng);
    c.levels = random_levels(rng, d);
    c.amplitudes = random_state(rng, d).amplitudes();
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome criterion_lcu_equivalence() {
  const auto t0 = Clock::now();
  double amp_err = 0.0, p_err = 0.0;
  const auto cases = lcu_cases();
  for (const auto& c : cases) {
    const bf::SpectralHamiltonian h(c.levels);
    const bf::EigenbasisState psi(c.amplitudes);
    const auto approx = bf::build_fourier_approx(c.spec, c.T, c.n);
    const auto& xi = approx.terms.frequencies;
    const auto& coef = approx.terms.coefficients;
    double l1 = 0.0;
    for (const auto& z : coef) l1 += std::abs(z);

    Eigen::VectorXcd expected(c.levels.size());
    for (Eigen::Index j = 0; j < expected.size(); ++j) {
      expected[j] = c.amplitudes[j] * oracle::lcu_direct(xi, coef, c.levels[j]) / l1;
    }
    const double p_expected = expected.squaredNorm();

    for (auto mode : {bf::LcuMode::kJointState, bf::LcuMode::kPostselectedBranch}) {
      const auto out = bf::simulate_lcu_terms(approx.terms, h, psi, mode);
      amp_err = std::max(amp_err, (out.postselected - expected).cwiseAbs().maxCoeff());
      p_err = std::max(p_err, std::abs(out.success_probability - p_expected));
      const auto report = bf::simulate_lcu(approx, h, psi, mode);
      p_err = std::max(p_err, std::abs(report.success_probability - p_expected));
    }
  }
  const double secs = seconds_since(t0);
  return {amp_err <= 1e-10 && p_err <= 1e-12 && secs < 60.0,
          fmt("%zu cases, max amplitude error %.2e (tol 1e-10), max p_succ error %.2e (tol 1e-12), %.1f s (limit 60 s)",
              cases.size(), amp_err, p_err, secs)};
}

Outcome criterion_error_bounds() {
  const auto t0 = Clock::now();
  int violations = 0;
  double worst_ratio = 0.0;
  const auto cases = lcu_cases();
  for (const auto& c : cases) {
    const auto approx = bf::build_fourier_approx(c.spec, c.T, c.n);
    const double bound = bf::truncation_error_bound(c.spec, c.T) +
                         bf::discretization_error_bound(c.spec, c.T, c.n);
    double measured = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = i / 2000.0;
      const auto fTN = oracle::lcu_direct(approx.terms.frequencies, approx.terms.coefficients, x);
      measured = std::max(measured, std::abs(bf::eval_f(c.spec, x) - fTN));
    }
    if (measured > bound) ++violations;
    worst_ratio = std::max(worst_ratio, measured / bound);
  }
  return {violations == 0,
          fmt("%d violations over %zu cases x 2001 points, worst measured/bound %.3g, %.1f s", violations,
              cases.size(), worst_ratio, seconds_since(t0))};
}

// -------------------------------------------------------------------- C3

Outcome criterion_closed_forms() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double a : {0.1, 1.0, 10.0, 100.0, 1e4}) {
    for (double beta : {0.5, 2.0, 8.0}) {
      const long double scale = beta / -std::expm1(-beta);
      const auto integrand = [&](long double x) { return std::exp(-2.0L * a * x * x - beta * x); };
      const double norm = static_cast<double>(scale * oracle::simpson_converged(integrand, 0.0L, 1.0L));
      worst = std::max(worst, std::abs(bf::model_norm_gaussian(a, beta) - norm));
      for (double lambda : {0.1, 0.3, 0.5}) {
        const double overlap =
            static_cast<double>(scale * oracle::simpson_converged(integrand, 0.0L, (long double)lambda));
        worst = std::max(worst, std::abs(bf::model_overlap_gaussian(a, beta, lambda) - overlap));
      }
    }
  }

  int sign_violations = 0;
  std::vector<double> as(200);
  for (int i = 0; i < 200; ++i) as[i] = std::pow(10.0, -2.0 + 8.0 * i / 199.0);
  for (double beta : {0.5, 2.0, 8.0}) {
    for (int i = 1; i < 200; ++i) {
      if (bf::model_norm_gaussian(as[i], beta) > bf::model_norm_gaussian(as[i - 1], beta)) ++sign_violations;
      for (double lambda : {0.1, 0.3, 0.5}) {
        if (bf::model_objective_gaussian(as[i], beta, lambda) <
            bf::model_objective_gaussian(as[i - 1], beta, lambda)) {
          ++sign_violations;
        }
      }
    }
  }
  for (double T : {5.0, 30.0, 100.0, 500.0}) {
    const auto spec = [](double a) { return bf::BoosterSpec::gaussian(a); };
    for (int i = 1; i < 200; ++i) {
      if (bf::truncation_error_bound(spec(as[i]), T) < bf::truncation_error_bound(spec(as[i - 1]), T)) {
        ++sign_violations;
      }
    }
  }
  return {worst <= 1e-8 && sign_violations == 0,
          fmt("max closed-form vs Simpson deviation %.2e (tol 1e-8) on 5x3x3 grid, %d monotonicity sign "
              "violations on 200 log-spaced a, %.1f s",
              worst, sign_violations, seconds_since(t0))};
}

// -------------------------------------------------------------------- C4

// log erfc(x) for x >= 0 in long double, from the oracle series / fraction.
long double oracle_log_erfc(long double x) {
  if (x < 3.0L) return std::log1p(-oracle::erf_maclaurin(x));
  long double tail = x;
  for (int k = 400; k >= 1; --k) tail = x + (k / 2.0L) / tail;
  return -x * x - std::log(std::sqrt(std::numbers::pi_v<long double>) * tail);
}

long double oracle_log_simplified(long double a, long double gap, long double T) {
  const long double u = -a * gap * gap;
  const long double v = oracle_log_erfc(std::numbers::pi_v<long double> * T / std::sqrt(a));
  const long double m = std::max(u, v);
  return m + std::log(std::exp(u - m) + std::exp(v - m));
}

Outcome criterion_optimizers() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  int constrained_fail = 0;
  double worst_shortfall = -1.0;
  constexpr int kGrid = 10000;
  for (int k = 0; k < 20; ++k) {
    bf::OptimizationConstraints c;
    c.p0 = 0.05 + 0.45 * u01(rng);
    c.delta = log_uniform(rng, 1e-6, 1e-2);
    c.lambda = 0.05 + 0.45 * u01(rng);
    const double beta = 0.5 + 7.5 * u01(rng);
    const double T = log_uniform(rng, 5.0, 500.0);
    const auto sol = bf::solve_gaussian_constrained(c, beta, T);

    double grid_best = -1.0;
    for (int i = 0; i < kGrid; ++i) {
      const double a = std::pow(10.0, -8.0 + 20.0 * i / (kGrid - 1.0));
      const bool feasible = bf::model_norm_gaussian(a, beta) >= c.p0 &&
                            std::erfc(std::numbers::pi * T / std::sqrt(a)) <= c.delta;
      if (feasible) grid_best = std::max(grid_best, bf::model_objective_gaussian(a, beta, c.lambda));
    }
    const double got = bf::model_objective_gaussian(sol.a, beta, c.lambda);
    const bool feasible = bf::model_norm_gaussian(sol.a, beta) >= c.p0 * (1 - 1e-9) &&
                          std::erfc(std::numbers::pi * T / std::sqrt(sol.a)) <= c.delta * (1 + 1e-9);
    worst_shortfall = std::max(worst_shortfall, grid_best - got);
    if (!feasible || got < grid_best - 1e-9) ++constrained_fail;
  }

  int simplified_fail = 0;
  double worst_cells = 0.0;
  constexpr int kScan = 100000;
  const double lo = std::log(1e-4), hi = std::log(1e12);
  const double cell = (hi - lo) / (kScan - 1);
  for (int k = 0; k < 20; ++k) {
    const double gap = log_uniform(rng, 0.01, 0.5);
    const double T = log_uniform(rng, 5.0, 500.0);
    const double a = bf::solve_simplified(gap, T);
    long double best = INFINITY;
    double best_log_a = lo;
    for (int i = 0; i < kScan; ++i) {
      const double la = lo + i * cell;
      const long double g = oracle_log_simplified(std::exp((long double)la), gap, T);
      if (g < best) {
        best = g;
        best_log_a = la;
      }
    }
    const double cells = std::abs(std::log(a) - best_log_a) / cell;
    worst_cells = std::max(worst_cells, cells);
    if (cells > 1.0 + 1e-9) ++simplified_fail;
  }
  const double secs = seconds_since(t0);
  return {constrained_fail == 0 && simplified_fail == 0 && secs < 30.0,
          fmt("constrained: %d/20 miss the 1e4-point grid optimum (worst shortfall %.2e, tol 1e-9); "
              "simplified: %d/20 off the 1e5-point scan (worst %.3f cells, tol 1); %.1f s (limit 30 s)",
              constrained_fail, worst_shortfall, simplified_fail, worst_cells, secs)};
}

// ---------------------------------------------------------------- C5 / C6

const std::vector<double> kFixtureT{30, 50, 100, 200, 300, 400, 500};

bf::SpectralSystem fixture() {
  return bf::load_spectrum_fixture(fs::path(BOOSTERFORGE_DATA_DIR) / "n2_like.spectrum", "Ha");
}

std::vector<bf::SweepRow> fixture_sweep(int jobs) {
  bf::SweepConfig config;
  config.t_values = kFixtureT;
  config.jobs = jobs;
  return bf::run_sweep(fixture(), config);
}

Outcome criterion_saturation() {
  const auto t0 = Clock::now();
  const auto sys = fixture();
  const double gamma2 = std::pow(sys.state.ground_overlap(), 2);
  const auto rows = fixture_sweep(4);

  bool monotone = true;
  double worst_drop = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double drop = rows[i - 1].overlap_ratio - rows[i].overlap_ratio;
    if (drop > 0) {
      monotone = false;
      worst_drop = std::max(worst_drop, drop);
    }
  }
  const auto& last = rows.back();
  const auto& first = rows.front();
  const bool reaches = last.overlap_ratio >= 1.88;
  const bool ideal_ok = std::abs(last.p_succ_ideal - gamma2) <= 0.01;
  const bool impl_low = first.p_succ_implemented <= first.p_succ_ideal - 0.02;
  // Not part of the verdict: the same T=30 point normalized by f(0) = 1 rather than l1.
  const double unit_norm =
      bf::simulate_lcu(bf::build_fourier_approx(bf::BoosterSpec::gaussian(first.a), first.T, first.n), sys.hamiltonian,
                       sys.state)
          .unit_norm_success_probability;
  const double secs = seconds_since(t0);
  return {monotone && reaches && ideal_ok && impl_low && secs < 300.0,
          fmt("[%s] ratio monotone in T (largest drop %.3g); [%s] ratio(T=500)=%.5f >= 1.88; "
              "[%s] p_ideal(T=500)=%.5f vs gamma^2=%.4f (tol 0.01); "
              "[%s] p_impl(T=30)=%.4f <= p_ideal(T=30)-0.02=%.4f (unit-norm p at T=30: %.3g); "
              "%.1f s (limit 300 s)",
              monotone ? "ok" : "FAIL", worst_drop, reaches ? "ok" : "FAIL", last.overlap_ratio,
              ideal_ok ? "ok" : "FAIL", last.p_succ_ideal, gamma2, impl_low ? "ok" : "FAIL",
              first.p_succ_implemented, first.p_succ_ideal - 0.02, unit_norm, secs)};
}

Outcome criterion_scaling() {
  const auto t0 = Clock::now();
  const auto rows = fixture_sweep(4);
  double r2 = 0.0;
  std::size_t used = 0;
  std::string fit_note;
  try {
    const auto fit = bf::fit_infidelity(rows, {1e-10, 0.3});
    r2 = fit.r_squared;
    used = fit.rows_used;
    fit_note = fmt("p=%.3f q=%.4g", fit.p, fit.q);
  } catch (const bf::InsufficientDataError& e) {
    fit_note = e.what();
  }
  const bool fit_ok = r2 >= 0.95;

  std::vector<bf::SweepRow> synthetic;
  for (double T : {30.0, 50.0, 100.0, 200.0, 300.0, 400.0, 500.0}) {
    bf::SweepRow r;
    r.T = T;
    r.tau = 0.023 * std::exp(-T / 46.72);
    synthetic.push_back(r);
  }
  const auto rt = bf::fit_infidelity(synthetic);
  const double rel = std::max(std::abs(rt.p / 46.72 - 1), std::abs(rt.q / 0.023 - 1));
  const bool rt_ok = rel <= 1e-6;
  return {fit_ok && rt_ok,
          fmt("[%s] fixture fit r^2=%.4f >= 0.95 over %zu rows with 1e-10<=tau<=0.3 (%s); "
              "[%s] synthetic (46.72, 0.023) round trip rel error %.2e (tol 1e-6); %.1f s",
              fit_ok ? "ok" : "FAIL", r2, used, fit_note.c_str(), rt_ok ? "ok" : "FAIL", rel,
              seconds_since(t0))};
}

// -------------------------------------------------------------------- C7

struct RandomSpectrum {
  bf::SpectralHamiltonian h;
  bf::EigenbasisState psi;
  double gap;
  double gamma;
};

RandomSpectrum random_gapped_spectrum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(8, 64);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int d = dim(rng);
  const double gap = log_uniform(rng, 0.05, 0.3);
  Eigen::VectorXd x(d);
  x[0] = 0.0;
  x[1] = gap;
  for (int j = 2; j < d; ++j) x[j] = gap + (1.0 - gap) * u01(rng);
  std::sort(x.begin() + 2, x.end());
  x[d - 1] = 1.0;

  const double gamma = 0.2 + 0.7 * u01(rng);
  auto rest = random_state(rng, d - 1).amplitudes();
  Eigen::VectorXcd mu(d);
  mu[0] = std::polar(gamma, 2 * std::numbers::pi * u01(rng));
  mu.tail(d - 1) = std::sqrt(1 - gamma * gamma) * rest;
  return {bf::SpectralHamiltonian(x), bf::EigenbasisState(mu), gap, gamma};
}

// Distance from the ground state after boosting with f_T, up to a global
// phase: sqrt(2 - 2|b_1|). f_T is realized as f_{T,N} with n raised until
// the distance is stable to 1e-4 of the quantity it is compared against.
struct Measured {
  double distance = 0.0;
  int n = 0;
};

Measured boosted_distance(const bf::BoosterSpec& spec, double T, const RandomSpectrum& s, double scale) {
  auto at = [&](int n) {
    const auto rep = bf::simulate_lcu(bf::build_fourier_approx(spec, T, n), s.h, s.psi,
                                      bf::LcuMode::kPostselectedBranch);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(rep.boosted_state.amplitudes()[0])));
  };
  int n = 8;
  double prev = at(n);
  while (n < 20) {
    const double next = at(n + 1);
    ++n;
    if (std::abs(next - prev) <= 1e-4 * scale) return {next, n};
    prev = next;
  }
  return {prev, n};
}

Outcome criterion_boosted_distance() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4242);
  int sweep_points = 0, sweep_violations = 0, depth_checks = 0, depth_violations = 0;
  double worst_sweep = 0.0, worst_depth = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto s = random_gapped_spectrum(rng);
    for (double c : {0.5, 1.0, 2.0, 3.0}) {
      const double T = std::max(1.0, c / s.gap);
      const double a = bf::solve_simplified(0.8 * s.gap, T);
      const double bound = bf::asymptotic_bounds({s.gap, s.gamma, T, 0.0}, a).total();
      const auto m = boosted_distance(bf::BoosterSpec::gaussian(a), T, s, bound);
      ++sweep_points;
      worst_sweep = std::max(worst_sweep, m.distance / bound);
      if (m.distance > bound) ++sweep_violations;
    }
    for (double eps : {0.1, 0.01, 0.001}) {
      const auto st = bf::sufficient_T(s.gap, s.gamma, eps);
      const auto m = boosted_distance(bf::BoosterSpec::gaussian(st.a), st.T, s, eps);
      ++depth_checks;
      worst_depth = std::max(worst_depth, m.distance / eps);
      if (m.distance > eps) ++depth_violations;
    }
  }
  return {sweep_violations == 0 && depth_violations == 0,
          fmt("%d/%d sweep points exceed the bound (worst measured/bound %.3g); %d/%d sufficient_T "
              "points exceed epsilon (worst distance/epsilon %.3g); %.1f s",
              sweep_violations, sweep_points, worst_sweep, depth_violations, depth_checks, worst_depth,
              seconds_since(t0))};
}

// -------------------------------------------------------------------- C8

Outcome criterion_qpe() {
  const auto qpe = bf::qpe_depth_comparison(-std::log2(1e-4));
  const auto acc = bf::depth_accounting(bf::build_fourier_approx(bf::BoosterSpec::gaussian(1e6), 500.0, 10));
  const bool qpe_ok = qpe >= 16000 && qpe <= 25000;
  const bool depth_ok = acc.depth_proxy == 1000.0;
  return {qpe_ok && depth_ok, fmt("[%s] QPE count %lld in [16000, 25000]; [%s] depth_proxy(T=500)=%.17g == 1000",
                                  qpe_ok ? "ok" : "FAIL", static_cast<long long>(qpe), depth_ok ? "ok" : "FAIL",
                                  acc.depth_proxy)};
}

// -------------------------------------------------------------------- C9

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_determinism() {
  const auto t0 = Clock::now();
  const auto base = fs::temp_directory_path() / "boosterforge_acceptance_determinism";
  fs::remove_all(base);
  std::string t_list;
  for (double T : kFixtureT) t_list += (t_list.empty() ? "" : ",") + fmt("%g", T);

  std::vector<std::string> csvs;
  for (int jobs : {1, 4}) {
    const auto out = base / ("jobs" + std::to_string(jobs));
    const std::string cmd = fmt("\"%s\" sweep --spectrum \"%s\" --family gaussian --optimizer simplified "
                                "--t-values %s --jobs %d --out \"%s\" > /dev/null",
                                BOOSTERFORGE_CLI, (fs::path(BOOSTERFORGE_DATA_DIR) / "n2_like.spectrum").c_str(),
                                t_list.c_str(), jobs, out.c_str());
    if (std::system(cmd.c_str()) != 0) return {false, "CLI sweep exited with an error: " + cmd};
    csvs.push_back(slurp(out / "sweep.csv"));
  }
  fs::remove_all(base);
  const bool same = !csvs[0].empty() && csvs[0] == csvs[1];
  return {same, fmt("sweep.csv from --jobs 1 and --jobs 4 %s (%zu bytes); %.1f s",
                    same ? "byte-identical" : "DIFFER", csvs[0].size(), seconds_since(t0))};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boosterforge acceptance suite"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {"lcu-oracle-equivalence", criterion_lcu_equivalence},
      {"error-bound-soundness", criterion_error_bounds},
      {"closed-form-vs-quadrature", criterion_closed_forms},
      {"optimizer-correctness", criterion_optimizers},
      {"saturation-on-n2-fixture", criterion_saturation},
      {"infidelity-scaling", criterion_scaling},
      {"boosted-distance-bound", criterion_boosted_distance},
      {"qpe-comparison", criterion_qpe},
      {"pipeline-determinism", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s C%zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
