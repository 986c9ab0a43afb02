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

// boosterforge: command-line front end.
//
//   boosterforge sweep --spectrum FILE | --hamiltonian FILE [--initial-bitstring BITS]
//                      --family F --optimizer O --t-values T1,T2,... --out DIR [...]
//   boosterforge fit --csv FILE
//   boosterforge qpe-compare --bits Q
//
// Exit codes: 0 success, 2 invalid input, 1 any other failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boosterforge/harness.hpp"
#include "boosterforge/lcu.hpp"
#include "boosterforge/pauli.hpp"
#include "boosterforge/spectrum.hpp"

namespace bf = boosterforge;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 1;

std::vector<double> parse_t_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw bf::DomainError("malformed T value '" + item + "'");
    }
  }
  return values;
}

struct SweepArgs {
  std::string spectrum;
  std::string hamiltonian;
  std::string bitstring;
  std::string family;
  std::string optimizer;
  std::string t_values;
  std::string out;
  double gap_derate = 0.8;
  std::optional<double> beta;
  std::optional<double> lambda;
  double p0 = 0.25;
  double epsilon = 0.01;
  double eta = 1.0;
  int jobs = 1;
};

int run_sweep_command(const SweepArgs& args) {
  if (args.spectrum.empty() == args.hamiltonian.empty()) {
    throw bf::DomainError("give exactly one of --spectrum or --hamiltonian");
  }
  if (!args.bitstring.empty() && args.hamiltonian.empty()) {
    throw bf::DomainError("--initial-bitstring only applies with --hamiltonian");
  }
  const bf::SpectralSystem system =
      args.spectrum.empty() ? bf::load_pauli_hamiltonian(args.hamiltonian, args.bitstring)
                            : bf::load_spectrum_fixture(args.spectrum, "Ha");

  bf::SweepConfig config;
  config.family = bf::parse_family(args.family);
  config.optimizer = bf::parse_optimizer(args.optimizer);
  config.t_values = parse_t_list(args.t_values);
  config.gap_derate = args.gap_derate;
  config.beta = args.beta;
  config.lambda = args.lambda;
  config.p0 = args.p0;
  config.epsilon = args.epsilon;
  config.eta = args.eta;
  config.jobs = args.jobs;

  std::vector<bf::SweepRow> rows;
  try {
    rows = bf::run_sweep(system, config);
  } catch (const bf::SweepError& e) {
    if (!e.completed().empty()) {
      const auto path = bf::write_sweep_csv(e.completed(), args.out);
      std::cerr << "wrote " << e.completed().size() << " completed rows to " << path.string() << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    std::rethrow_exception(e.cause());
  }

  std::optional<bf::FitResult> fit;
  try {
    fit = bf::fit_infidelity(rows);
    for (const auto& w : fit->warnings) std::cerr << "warning: " << w << "\n";
  } catch (const bf::InsufficientDataError& e) {
    std::cerr << "note: no infidelity fit (" << e.what() << ")\n";
  }
  const double gamma = system.state.ground_overlap();
  const auto written = bf::emit_outputs(rows, fit, args.out, {config.family, gamma * gamma});
  for (const auto& p : written) std::cout << p.string() << "\n";
  if (fit) std::printf("fit: p = %.10g, q = %.10g, r^2 = %.6f\n", fit->p, fit->q, fit->r_squared);
  return 0;
}

int run_fit_command(const std::string& csv) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw bf::DomainError("cannot open '" + csv + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto fit = bf::fit_infidelity(bf::parse_sweep_csv(buffer.str()));
  for (const auto& w : fit.warnings) std::cerr << "warning: " << w << "\n";
  std::printf("p = %.17g\nq = %.17g\nr_squared = %.17g\nrows_used = %zu\n", fit.p, fit.q,
              fit.r_squared, fit.rows_used);
  return 0;
}

int run_qpe_command(double bits) {
  std::printf("%lld\n", static_cast<long long>(bf::qpe_depth_comparison(bits)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design, simulate and optimize ground-state boosters f(H)"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep T on a spectrum and emit CSV/SVG outputs");
  auto* spectrum_opt = sweep_cmd->add_option("--spectrum", sweep.spectrum, "Spectrum fixture file");
  auto* ham_opt = sweep_cmd->add_option("--hamiltonian", sweep.hamiltonian, "Pauli-sum file (<= 8 qubits)");
  spectrum_opt->excludes(ham_opt);
  sweep_cmd->add_option("--initial-bitstring", sweep.bitstring, "Computational-basis input state")
      ->needs(ham_opt);
  sweep_cmd->add_option("--family", sweep.family, "gaussian, hsec, exponential or identity")->required();
  sweep_cmd->add_option("--optimizer", sweep.optimizer, "constrained or simplified")->required();
  sweep_cmd->add_option("--t-values", sweep.t_values, "Comma-separated ascending T list")->required();
  sweep_cmd->add_option("--gap-derate", sweep.gap_derate, "Fraction of the gap to optimize for")
      ->capture_default_str();
  sweep_cmd->add_option("--beta", sweep.beta, "Weight-model decay (constrained optimizer)");
  sweep_cmd->add_option("--lambda", sweep.lambda, "Overlap window (constrained optimizer)");
  sweep_cmd->add_option("--p0", sweep.p0, "Minimum success probability")->capture_default_str();
  sweep_cmd->add_option("--epsilon", sweep.epsilon, "Overlap accuracy target")->capture_default_str();
  sweep_cmd->add_option("--eta", sweep.eta, "Lower bound on the transform's L1 norm")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Parallel sweep points")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();

  std::string csv;
  auto* fit_cmd = app.add_subcommand("fit", "Fit T = p ln(q / tau) to a sweep CSV");
  fit_cmd->add_option("--csv", csv, "sweep.csv path")->required();

  double bits = 0.0;
  auto* qpe_cmd = app.add_subcommand("qpe-compare", "Controlled-unitary count of textbook QPE");
  qpe_cmd->add_option("--bits", bits, "Bits of precision")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sweep_cmd) return run_sweep_command(sweep);
    if (*fit_cmd) return run_fit_command(csv);
    if (*qpe_cmd) return run_qpe_command(bits);
  } catch (const bf::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}
