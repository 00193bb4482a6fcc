// Copyright 2026 The adiol Authors
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

#include "adiol/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <ostream>

#include "adiol/config.hpp"
#include "adiol/csv.hpp"
#include "adiol/errors.hpp"
#include "adiol/tracker.hpp"
#include "adiol/verify.hpp"

namespace adiol {

namespace {

std::string fmt(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string fmt(const std::optional<double>& value) {
  return value ? fmt(*value) : std::string("not_reached");
}

std::string fmt(const Pole& p) {
  std::string s = fmt(p.real());
  s += p.imag() < 0.0 ? "-" : "+";
  s += fmt(std::abs(p.imag())) + "i";
  return s;
}

constexpr std::uint64_t kVerifySeed = 20230301;

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::ostream& out) {
  const SimConfig cfg = load_config(config_path);
  const TimeSeries ts = simulate(cfg);
  write_csv_file(out_path, ts);
  print_metrics(out, summarize(ts, cfg));
  return kExitOk;
}

int run_gains(const std::vector<std::string>& tokens, std::ostream& out) {
  std::vector<Pole> poles;
  for (const std::string& t : tokens) poles.push_back(parse_pole(t));
  const GainSet g = place_gains(std::span<const Pole>(poles));
  const Vec4 mag = g.magnitudes();
  for (int i = 0; i < 4; ++i) {
    out << "k" << i + 1 << ": " << fmt(mag(i)) << '\n';
  }
  for (int i = 0; i < 4; ++i) {
    out << "k_signed" << i + 1 << ": " << fmt(g.k(i)) << '\n';
  }
  const auto eig = closed_loop_eigenvalues(g);
  std::vector<Pole> sorted(eig.data(), eig.data() + eig.size());
  std::sort(sorted.begin(), sorted.end(), [](const Pole& a, const Pole& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out << "eigenvalue" << i + 1 << ": " << fmt(sorted[i]) << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& config_path, std::ostream& out) {
  const SimConfig cfg = load_config(config_path);
  bool ok = true;

  const auto states = random_extended_states(20, kVerifySeed);
  const RelativeDegreeSummary rd = check_relative_degree(states, cfg.plant);
  out << "relative_degree.states: " << rd.states << '\n'
      << "relative_degree.max_lower_scaled: " << fmt(rd.max_lower) << '\n'
      << "relative_degree.max_beta_rel_error: " << fmt(rd.max_beta_rel_error)
      << '\n'
      << "relative_degree.total: " << (rd.passed() ? 8 : 0) << '\n'
      << "relative_degree.passed: " << (rd.passed() ? "true" : "false")
      << '\n';
  ok = ok && rd.passed();

  const auto many = random_extended_states(1000, kVerifySeed + 1, 0.1, 20.0);
  const BetaInverseSummary bi =
      check_beta_inverse(many, ParamEstimate::from_plant(cfg.plant));
  out << "beta_inverse.states: " << bi.states << '\n'
      << "beta_inverse.max_identity_error: " << fmt(bi.max_identity_error)
      << '\n'
      << "beta_inverse.max_det_rel_error: " << fmt(bi.max_det_rel_error)
      << '\n'
      << "beta_inverse.passed: " << (bi.passed() ? "true" : "false") << '\n';
  ok = ok && bi.passed();

  // The identity needs a smooth reference, so a Hilbert config is checked
  // on the default ellipse.
  SimConfig lin = exact_parameter_config(cfg);
  if (!std::holds_alternative<EllipseSpec>(lin.traj)) {
    lin.traj = EllipseSpec{};
    out << "linearization.trajectory: ellipse (substituted)\n";
  }
  lin.x0.reset();
  lin.t_end = 3.0;
  const LinearizationSummary ls = check_linearization(simulate(lin), 0.5);
  const bool lin_ok = ls.samples > 0 && ls.rel_error() < 1e-3;
  out << "linearization.samples: " << ls.samples << '\n'
      << "linearization.max_abs_error: " << fmt(ls.max_abs_error) << '\n'
      << "linearization.rel_error: " << fmt(ls.rel_error()) << '\n'
      << "linearization.passed: " << (lin_ok ? "true" : "false") << '\n';
  ok = ok && lin_ok;

  out << "verify.passed: " << (ok ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int run_report(const std::string& csv_path, double rmse_start,
               std::ostream& out) {
  MetricsOptions opt;
  opt.rmse_start = rmse_start;
  print_metrics(out, summarize(read_csv_file(csv_path), opt));
  return kExitOk;
}

}  // namespace

void print_metrics(std::ostream& out, const Metrics& m) {
  out << "pos_rmse: " << fmt(m.pos_rmse) << '\n'
      << "settle_time: " << fmt(m.settle_time) << '\n'
      << "theta_converge_time: " << fmt(m.theta_converge_time) << '\n'
      << "max_thrust: " << fmt(m.max_thrust) << '\n'
      << "max_torque: " << fmt(m.max_torque) << '\n';
}

int run_cli(std::span<const std::string> argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Adaptive dynamic input-output linearization of a planar "
               "bicopter: simulation and numeric checks"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path;
  std::vector<std::string> pole_tokens;
  double rmse_start = MetricsOptions{}.rmse_start;

  auto* sim_cmd = app.add_subcommand("simulate", "run a closed-loop simulation");
  sim_cmd->add_option("config", config_path, "config file")->required();
  sim_cmd->add_option("out", out_path, "CSV output path")->required();

  auto* gains_cmd =
      app.add_subcommand("gains", "per-chain gains for 4 closed-loop poles");
  gains_cmd->add_option("poles", pole_tokens, "4 poles, e.g. -4.5 or -1+2i")
      ->required()
      ->expected(4);

  auto* verify_cmd = app.add_subcommand("verify", "run the numeric oracles");
  verify_cmd->add_option("config", config_path, "config file")->required();

  auto* report_cmd =
      app.add_subcommand("report", "recompute metrics from a CSV");
  report_cmd->add_option("csv", csv_path, "CSV written by simulate")
      ->required();
  report_cmd->add_option("--rmse-start", rmse_start,
                         "start of the pos_rmse window (s)");

  std::vector<std::string> args(argv.begin(), argv.end());
  if (args.empty()) args.emplace_back("adiol");
  // Keep negative poles from being read as flags.
  if (args.size() > 1 && args[1] == "gains") {
    bool has_separator =
        std::find(args.begin(), args.end(), "--") != args.end();
    if (!has_separator) args.insert(args.begin() + 2, "--");
  }
  std::vector<const char*> cargs;
  for (const std::string& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*sim_cmd) return run_simulate(config_path, out_path, out);
    if (*gains_cmd) return run_gains(pole_tokens, out);
    if (*verify_cmd) return run_verify(config_path, out);
    if (*report_cmd) return run_report(csv_path, rmse_start, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace adiol
