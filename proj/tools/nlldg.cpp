// Command-line driver: simulate / convergence / bench.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlldg/commands.hpp"
#include "nlldg/config.hpp"
#include "nlldg/errors.hpp"

namespace {

struct Overrides {
  std::optional<std::string> scenario;
  std::optional<std::string> config_file;
  std::optional<int> p;
  std::optional<int> n;
  std::optional<double> beta;
  std::optional<double> T;
  std::optional<double> gamma;
  std::optional<double> kappa;
  std::optional<double> m_tvb;
  std::optional<std::string> limiter;
  std::optional<std::string> bc;
  std::optional<std::string> alpha;
  std::optional<std::string> integrand;
  std::optional<std::string> out;
  std::vector<double> snapshots;
  std::optional<int> repeats;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--scenario", o.scenario,
                  "rarefaction | shock_forward | shock_backward | jam_step | sine");
  cmd->add_option("--config", o.config_file, "JSON config file (overrides scenario defaults)");
  cmd->add_option("--p", o.p, "polynomial degree");
  cmd->add_option("--n", o.n, "number of cells");
  cmd->add_option("--beta", o.beta, "CFL number in (0, 1]");
  cmd->add_option("--T", o.T, "final time");
  cmd->add_option("--gamma", o.gamma, "look-ahead horizon (0 = local model)");
  cmd->add_option("--kappa", o.kappa, "diffusion intensity");
  cmd->add_option("--mtvb", o.m_tvb, "TVB constant of the slope limiter");
  cmd->add_option("--limiter", o.limiter, "on | off");
  cmd->add_option("--bc", o.bc, "periodic | frozen");
  cmd->add_option("--alpha", o.alpha, "global | local");
  cmd->add_option("--integrand", o.integrand, "full | simplified");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--snapshots", o.snapshots, "snapshot times t1,t2,...")->delimiter(',');
  cmd->add_option("--repeats", o.repeats, "timing repeats");
}

nlldg::RunConfig resolve(const Overrides& o, const std::string& fallback_scenario) {
  using nlldg::ConfigError;
  nlohmann::json file_config;
  if (o.config_file) {
    std::ifstream in(*o.config_file);
    if (!in) throw ConfigError("cannot read config file " + *o.config_file);
    try {
      file_config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed config file " + *o.config_file + ": " + e.what());
    }
  }
  std::string scenario = fallback_scenario;
  if (file_config.contains("scenario")) scenario = file_config.at("scenario").get<std::string>();
  if (o.scenario) scenario = *o.scenario;

  nlldg::RunConfig c = nlldg::scenario_defaults(scenario);
  if (!file_config.is_null()) nlldg::from_json(file_config, c);
  c.scenario = scenario;

  if (o.p) c.p = *o.p;
  if (o.n) c.n = *o.n;
  if (o.beta) c.beta = *o.beta;
  if (o.T) c.T = *o.T;
  if (o.gamma) c.gamma = *o.gamma;
  if (o.kappa) c.kappa = *o.kappa;
  if (o.m_tvb) c.m_tvb = *o.m_tvb;
  if (o.limiter) {
    if (*o.limiter == "on") c.limiter = true;
    else if (*o.limiter == "off") c.limiter = false;
    else throw ConfigError("--limiter expects on|off");
  }
  if (o.bc) c.bc = nlldg::parse_boundary_mode(*o.bc);
  if (o.alpha) c.alpha = nlldg::parse_alpha_mode(*o.alpha);
  if (o.integrand) c.integrand = nlldg::parse_integrand_mode(*o.integrand);
  if (o.out) c.out_dir = *o.out;
  if (!o.snapshots.empty()) {
    c.snapshots = o.snapshots;
  } else if (o.T) {
    // Default snapshot times past an overridden T are dropped.
    std::erase_if(c.snapshots, [&](double t) { return t > c.T; });
    if (c.snapshots.empty()) c.snapshots = {c.T};
  }
  if (o.repeats) c.repeats = *o.repeats;
  nlldg::validate(c);
  for (const auto& w : nlldg::config_warnings(c)) std::cerr << "warning: " << w << '\n';
  return c;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-local LDG solver for diffusive traffic flow"};
  app.require_subcommand(1);

  Overrides sim_o, conv_o, bench_o;
  auto* simulate = app.add_subcommand("simulate", "run one scenario and export snapshots");
  add_common(simulate, sim_o);

  auto* convergence = app.add_subcommand("convergence", "L2 convergence table against a fine reference");
  add_common(convergence, conv_o);
  nlldg::ConvergenceOptions conv_opts;
  convergence->add_option("--degrees", conv_opts.degrees, "polynomial degrees")->delimiter(',');
  convergence->add_option("--meshes", conv_opts.meshes, "cell counts")->delimiter(',');
  convergence->add_option("--ref-p", conv_opts.reference_p, "reference degree");
  convergence->add_option("--ref-n", conv_opts.reference_n, "reference cell count");

  auto* bench = app.add_subcommand("bench", "timing breakdown and scaling");
  add_common(bench, bench_o);
  nlldg::BenchOptions bench_opts;
  bench->add_option("--meshes", bench_opts.meshes, "cell counts")->delimiter(',');
  bench->add_option("--variants", bench_opts.variants, "full,nonlocal,local")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nlldg::exit_config;
  }

  try {
    if (*simulate) {
      return nlldg::cmd_simulate(resolve(sim_o, "sine"), std::cout);
    }
    if (*convergence) {
      nlldg::RunConfig c = resolve(conv_o, "sine");
      conv_opts.repeats = conv_o.repeats.value_or(1);
      if (conv_opts.repeats < 1) throw nlldg::ConfigError("repeats must be >= 1");
      return nlldg::cmd_convergence(c, conv_opts, std::cout);
    }
    if (*bench) {
      nlldg::RunConfig c = resolve(bench_o, "sine");
      if (!bench_o.p) c.p = 3;
      bench_opts.repeats = c.repeats;
      return nlldg::cmd_bench(c, bench_opts, std::cout);
    }
  } catch (const nlldg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return nlldg::exit_config;
  } catch (const nlldg::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return nlldg::exit_numerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nlldg::exit_config;
  }
  return nlldg::exit_ok;
}
