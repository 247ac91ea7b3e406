// Batch front end: load a JSON model description, compute equilibria,
// run parameter sweeps and assumption certificates, emit JSON/CSV.
//
// Exit codes: 0 success, 1 configuration error, 2 non-convergence,
// 3 assumption witness found.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "electoral/analysis.hpp"
#include "electoral/assumptions.hpp"
#include "electoral/json_io.hpp"
#include "electoral/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitWitness = 3;

electoral::io::ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw electoral::ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw electoral::ConfigError(path + ": " + e.what());
  }
  return electoral::io::config_from_json(j);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw electoral::ConfigError("cannot open output file: " + out_path);
  out << content;
}

nlohmann::json platform_json(const electoral::MedianBelief& belief,
                             const electoral::PlatformProfile& p) {
  return {{"x_l", p.x_l},
          {"x_r", p.x_r},
          {"win_prob", electoral::win_probability(belief, p)},
          {"pi_star", electoral::expected_policy(belief, p)}};
}

int cmd_solve(const std::string& config_path, const std::string& regime,
              const std::string& out_path) {
  const electoral::io::ModelConfig cfg = load_config(config_path);
  nlohmann::json report;
  int exit_code = kExitOk;
  if (regime == "no-commitment") {
    const electoral::PlatformProfile p =
        electoral::no_commitment_equilibrium(cfg.model.ideals);
    report = {{"regime", "no-commitment"}, {"equilibrium", platform_json(cfg.model.belief, p)}};
  } else {
    const electoral::EquilibriumReport eq = electoral::extremal_equilibria(cfg.model, cfg.solver);
    report = {{"regime", "commitment"},
              {"smallest", platform_json(cfg.model.belief, eq.smallest)},
              {"largest", platform_json(cfg.model.belief, eq.largest)},
              {"iterations_smallest", eq.iterations_smallest},
              {"iterations_largest", eq.iterations_largest},
              {"converged", eq.converged},
              {"monotonicity_clamped", eq.monotonicity_clamped}};
    if (!eq.converged) exit_code = kExitNonConvergence;
  }
  write_output(out_path, report.dump(2) + "\n");
  return exit_code;
}

electoral::Regime parse_regime(const std::string& name) {
  if (name == "commitment-smallest") return electoral::Regime::CommitmentSmallest;
  if (name == "commitment-largest") return electoral::Regime::CommitmentLargest;
  if (name == "no-commitment") return electoral::Regime::NoCommitment;
  throw electoral::ConfigError("unknown regime: " + name);
}

int cmd_sweep(const std::string& config_path, const std::string& vary, double from, double to,
              std::size_t steps, const std::string& regime, const std::string& out_path) {
  const electoral::io::ModelConfig cfg = load_config(config_path);
  if (steps < 1) throw electoral::ConfigError("--steps must be >= 1");
  if (!(from >= 0.0 && from <= 1.0 && to >= 0.0 && to <= 1.0))
    throw electoral::ConfigError("sweep range must lie in [0,1]");
  const electoral::VaryIdeal axis =
      vary == "tl" ? electoral::VaryIdeal::TL : electoral::VaryIdeal::TR;
  std::vector<double> values(steps);
  for (std::size_t i = 0; i < steps; ++i)
    values[i] = steps == 1 ? from
                           : from + (to - from) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
  for (double v : values) {
    const bool ok = axis == electoral::VaryIdeal::TL ? v < cfg.model.ideals.t_r
                                                     : v > cfg.model.ideals.t_l;
    if (!ok)
      throw electoral::ConfigError("sweep value " + electoral::format_value(v) +
                                   " violates t_l < t_r against the fixed ideal");
  }
  const std::vector<electoral::SweepRow> rows =
      electoral::sweep_ideal(cfg.model, axis, values, parse_regime(regime), cfg.solver);
  std::ostringstream csv;
  electoral::write_sweep_csv(csv, rows);
  write_output(out_path, csv.str());
  for (const auto& row : rows)
    if (!row.converged) return kExitNonConvergence;
  return kExitOk;
}

int cmd_check(const std::string& config_path, const std::string& assumption, std::size_t samples,
              const std::string& out_path) {
  const electoral::io::ModelConfig cfg = load_config(config_path);
  electoral::CertificateReport report;
  if (assumption == "sls") {
    report = electoral::check_sls(cfg.model.utility, samples);
  } else if (assumption == "sscp") {
    report = electoral::check_sscp(cfg.model.utility, cfg.model.belief, samples);
  } else if (assumption == "claim7") {
    report = electoral::check_sls_implies_shift(cfg.model.utility, cfg.model.belief, samples);
  } else {
    throw electoral::ConfigError("unknown assumption: " + assumption);
  }
  write_output(out_path, electoral::io::to_json(report, assumption).dump(2) + "\n");
  return report.passed ? kExitOk : kExitWitness;
}

int cmd_counterexample(double t_r, std::size_t steps, const std::string& out_path) {
  if (!(t_r > 0.0 && t_r <= 1.0)) throw electoral::ConfigError("--t_r must lie in (0,1]");
  if (steps < 2) throw electoral::ConfigError("--steps must be >= 2");
  const electoral::MedianBelief belief = electoral::MedianBelief::triangular(0.5);
  std::ostringstream csv;
  csv << "t_l,t_r,regime,x_l,x_r,win_prob,pi_star,converged,pi_star_closed,dpi_dtl\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const double t_l = t_r * static_cast<double>(i) / static_cast<double>(steps - 1);
    const electoral::PlatformProfile p(t_l, t_r);  // no-commitment platforms are the ideals
    const double pi = electoral::expected_policy(belief, p);
    const double pi_closed = electoral::triangular_pi_star_closed_form(t_l, t_r);
    csv << electoral::format_value(t_l) << ',' << electoral::format_value(t_r)
        << ",no-commitment," << electoral::format_value(p.x_l) << ','
        << electoral::format_value(p.x_r) << ','
        << electoral::format_value(electoral::win_probability(belief, p)) << ','
        << electoral::format_value(pi) << ",1," << electoral::format_value(pi_closed) << ',';
    if (t_l <= 1.0 - t_r + 1e-12)
      csv << electoral::format_value(electoral::triangular_pi_star_derivative(t_l, t_r));
    else
      csv << "nan";  // derivative formula only covers the branch t_l <= 1 - t_r
    csv << '\n';
  }
  write_output(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-candidate electoral competition laboratory"};
  app.require_subcommand(1);

  std::string config_path, out_path, regime, vary, assumption;
  double from = 0.0, to = 0.0, t_r = 0.0;
  std::size_t steps = 61, samples = 10000;

  CLI::App* solve = app.add_subcommand("solve", "Compute equilibrium platforms");
  solve->add_option("--config", config_path, "Model config JSON")->required();
  solve->add_option("--regime", regime, "commitment | no-commitment")
      ->default_val("commitment")
      ->check(CLI::IsMember({"commitment", "no-commitment"}));
  solve->add_option("--out", out_path, "Output path (default: stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one ideal policy");
  sweep->add_option("--config", config_path, "Model config JSON")->required();
  sweep->add_option("--vary", vary, "tl | tr")->required()->check(CLI::IsMember({"tl", "tr"}));
  sweep->add_option("--from", from, "Sweep start")->required();
  sweep->add_option("--to", to, "Sweep end")->required();
  sweep->add_option("--steps", steps, "Number of rows")->default_val(11);
  sweep->add_option("--regime", regime,
                    "commitment-smallest | commitment-largest | no-commitment")
      ->default_val("commitment-smallest")
      ->check(CLI::IsMember({"commitment-smallest", "commitment-largest", "no-commitment"}));
  sweep->add_option("--out", out_path, "Output path (default: stdout)");

  CLI::App* check = app.add_subcommand("check", "Run an assumption certificate");
  check->add_option("--config", config_path, "Model config JSON")->required();
  check->add_option("--assumption", assumption, "sscp | sls | claim7")
      ->required()
      ->check(CLI::IsMember({"sscp", "sls", "claim7"}));
  check->add_option("--samples", samples, "Tuples to sample")->default_val(10000);
  check->add_option("--out", out_path, "Output path (default: stdout)");

  CLI::App* cex = app.add_subcommand(
      "counterexample", "No-commitment triangular sweep with closed-form columns");
  cex->add_option("--t_r", t_r, "Right candidate ideal policy")->required();
  cex->add_option("--steps", steps, "Number of rows")->default_val(61);
  cex->add_option("--out", out_path, "Output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(config_path, regime, out_path);
    if (sweep->parsed()) return cmd_sweep(config_path, vary, from, to, steps, regime, out_path);
    if (check->parsed()) return cmd_check(config_path, assumption, samples, out_path);
    if (cex->parsed()) return cmd_counterexample(t_r, steps, out_path);
  } catch (const electoral::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const electoral::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
