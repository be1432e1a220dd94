#include "nlldg/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace nlldg {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

double mass_drift(const SimulationResult& r) {
  if (r.mass_trace.empty()) return 0.0;
  const double m0 = r.mass_trace.front().second;
  double drift = 0.0;
  for (const auto& [t, m] : r.mass_trace) drift = std::max(drift, std::abs(m - m0));
  return m0 != 0.0 ? drift / std::abs(m0) : drift;
}

} // namespace

nlohmann::json simulation_summary(const RunConfig& config, const SimulationResult& result) {
  nlohmann::json mass = nlohmann::json::array();
  for (const auto& [t, m] : result.mass_trace) mass.push_back({t, m});
  nlohmann::json snaps = nlohmann::json::array();
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    snaps.push_back({{"file", "snapshot_" + std::to_string(i) + ".csv"},
                     {"requested_time", result.snapshots[i].requested},
                     {"time", result.snapshots[i].time}});
  }
  return nlohmann::json{{"config", config},
                        {"steps", result.steps},
                        {"dt", result.dt},
                        {"final_time", result.final_field.time()},
                        {"min_rho", result.min_rho},
                        {"max_rho", result.max_rho},
                        {"mass_initial", total_mass(result.initial)},
                        {"mass_final", total_mass(result.final_field)},
                        {"mass_relative_drift", mass_drift(result)},
                        {"mass_trace", mass},
                        {"snapshots", snaps},
                        {"failed", result.failed},
                        {"failure", result.failure},
                        {"timing", result.timing}};
}

int cmd_simulate(const RunConfig& config, std::ostream& log) {
  const SimulationResult result = run_simulation(config);
  const fs::path dir(config.out_dir);
  fs::create_directories(dir);
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    auto out = open_output(dir / ("snapshot_" + std::to_string(i) + ".csv"));
    write_snapshot_csv(out, result.snapshots[i].field);
  }
  {
    auto out = open_output(dir / "final.csv");
    write_snapshot_csv(out, result.final_field);
  }
  {
    auto out = open_output(dir / "summary.json");
    out << std::setw(2) << simulation_summary(config, result) << '\n';
  }
  log << "simulate " << config.scenario << ": " << result.steps << " steps, t = "
      << result.final_field.time() << ", rho in [" << result.min_rho << ", " << result.max_rho
      << "], " << result.timing.total << " s\n";
  if (result.failed) {
    log << "numerical failure: " << result.failure << '\n';
    return exit_numerical;
  }
  return exit_ok;
}

ConvergenceTable run_convergence(const RunConfig& base, const ConvergenceOptions& options,
                                 std::ostream* log) {
  ConvergenceTable table;
  table.reference_p = options.reference_p;
  table.reference_n = options.reference_n;
  SimulationOptions sim;

  RunConfig ref_config = base;
  ref_config.p = options.reference_p;
  ref_config.n = options.reference_n;
  ref_config.snapshots.clear();
  const SimulationResult reference = run_simulation(ref_config, sim);
  table.reference_seconds = reference.timing.total;
  table.max_mass_drift = mass_drift(reference);
  if (reference.failed) throw NumericalError(reference.final_field.time(), -1, NAN);
  if (log) {
    *log << "reference p=" << ref_config.p << " n=" << ref_config.n << ": "
         << reference.timing.total << " s\n";
  }

  for (int p : options.degrees) {
    for (int n : options.meshes) {
      RunConfig c = base;
      c.p = p;
      c.n = n;
      c.snapshots.clear();
      ConvergenceRow row;
      row.p = p;
      row.n = n;
      row.dof = (p + 1) * n;
      double seconds = 0.0;
      SimulationResult result = run_simulation(c, sim);
      seconds += result.timing.total;
      for (int r = 1; r < options.repeats && !result.failed; ++r) {
        seconds += run_simulation(c, sim).timing.total;
      }
      row.cpu_seconds = seconds / options.repeats;
      row.failed = result.failed;
      if (!result.failed) {
        row.l2_error = l2_error(result.final_field, reference.final_field);
        table.max_mass_drift = std::max(table.max_mass_drift, mass_drift(result));
      }
      if (log) {
        *log << "p=" << p << " n=" << n << " L2=" << row.l2_error << " cpu=" << row.cpu_seconds
             << (row.failed ? " FAILED" : "") << '\n';
      }
      table.rows.push_back(row);
    }
  }

  for (int p : options.degrees) {
    const ConvergenceRow* coarse = nullptr;
    const ConvergenceRow* fine = nullptr;
    for (const auto& row : table.rows) {
      if (row.p != p || row.failed) continue;
      if (!coarse || row.n < coarse->n) coarse = &row;
      if (!fine || row.n > fine->n) fine = &row;
    }
    if (coarse && fine && coarse != fine && coarse->l2_error > 0.0 && fine->l2_error > 0.0) {
      table.rates[p] = convergence_rate(coarse->l2_error, fine->l2_error, 1.0 / coarse->n,
                                        1.0 / fine->n);
    }
  }
  return table;
}

void write_convergence_csv(std::ostream& out, const ConvergenceTable& table) {
  const auto old_precision = out.precision(10);
  out << "p,n,dof,l2_error,cpu_seconds,rate,status\n";
  for (const auto& row : table.rows) {
    out << row.p << ',' << row.n << ',' << row.dof << ',';
    if (row.failed) {
      out << ",," << ",failed\n";
      continue;
    }
    out << row.l2_error << ',' << row.cpu_seconds << ',';
    if (auto it = table.rates.find(row.p); it != table.rates.end()) out << it->second;
    out << ",ok\n";
  }
  out.precision(old_precision);
}

int cmd_convergence(const RunConfig& base, const ConvergenceOptions& options, std::ostream& log) {
  const ConvergenceTable table = run_convergence(base, options, &log);
  const fs::path dir(base.out_dir);
  fs::create_directories(dir);
  {
    auto out = open_output(dir / "convergence.csv");
    write_convergence_csv(out, table);
  }
  nlohmann::json rates = nlohmann::json::object();
  for (const auto& [p, m] : table.rates) rates[std::to_string(p)] = m;
  {
    auto out = open_output(dir / "convergence.json");
    out << std::setw(2)
        << nlohmann::json{{"config", base},
                          {"reference", {{"p", table.reference_p},
                                         {"n", table.reference_n},
                                         {"seconds", table.reference_seconds}}},
                          {"rates", rates},
                          {"max_mass_relative_drift", table.max_mass_drift}}
        << '\n';
  }
  bool any_failed = false;
  for (const auto& row : table.rows) any_failed = any_failed || row.failed;
  for (const auto& [p, m] : table.rates) log << "rate p=" << p << ": " << m << '\n';
  return any_failed ? exit_numerical : exit_ok;
}

const BenchPoint* BenchResult::find(const std::string& variant, int n) const {
  for (const auto& pt : points) {
    if (pt.variant == variant && pt.n == n) return &pt;
  }
  return nullptr;
}

BenchResult run_bench(const RunConfig& base, const BenchOptions& options, std::ostream* log) {
  BenchResult result;
  result.p = base.p;
  result.repeats = options.repeats;
  SimulationOptions sim;
  sim.record_mass = false;

  for (const auto& variant : options.variants) {
    RunConfig c = base;
    c.snapshots.clear();
    if (variant == "nonlocal") {
      c.kappa = 0.0;
    } else if (variant == "local") {
      c.kappa = 0.0;
      c.gamma = 0.0;
    } else if (variant != "full") {
      throw ConfigError("unknown bench variant '" + variant + "'");
    }
    std::vector<double> ns, per_step, totals;
    for (int n : options.meshes) {
      c.n = n;
      TimingReport sum;
      for (int r = 0; r < options.repeats; ++r) {
        const SimulationResult run = run_simulation(c, sim);
        if (run.failed) throw NumericalError(run.final_field.time(), -1, NAN);
        sum += run.timing;
      }
      const TimingReport mean = sum.scaled(1.0 / options.repeats);
      result.points.push_back({variant, n, mean});
      ns.push_back(n);
      per_step.push_back(mean.per_step());
      totals.push_back(mean.total);
      if (log) {
        *log << variant << " n=" << n << ": " << mean.total << " s (" << mean.per_step() * 1e3
             << " ms/step; standard " << mean.standard_pct() << "%, diffusion "
             << mean.diffusion_pct() << "%, nonlocal " << mean.nonlocal_pct() << "%)\n";
      }
    }
    if (ns.size() >= 2) {
      result.per_step_slope[variant] = loglog_slope(ns, per_step);
      result.total_slope[variant] = loglog_slope(ns, totals);
    }
  }
  for (int n : options.meshes) {
    const BenchPoint* full = result.find("full", n);
    const BenchPoint* nonlocal = result.find("nonlocal", n);
    if (full && nonlocal && nonlocal->mean.total > 0.0) {
      result.diffusion_ratio[n] = full->mean.total / nonlocal->mean.total;
    }
  }
  return result;
}

void to_json(nlohmann::json& j, const BenchResult& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : r.points) {
    pts.push_back({{"variant", pt.variant}, {"n", pt.n}, {"timing", pt.mean}});
  }
  nlohmann::json ratio = nlohmann::json::object();
  for (const auto& [n, v] : r.diffusion_ratio) ratio[std::to_string(n)] = v;
  j = nlohmann::json{{"p", r.p},
                     {"repeats", r.repeats},
                     {"points", pts},
                     {"per_step_slope", r.per_step_slope},
                     {"total_slope", r.total_slope},
                     {"diffusion_ratio", ratio}};
}

void write_scaling_csv(std::ostream& out, const BenchResult& r) {
  const auto old_precision = out.precision(10);
  out << "variant,n,steps,total_seconds,seconds_per_step,standard_pct,diffusion_pct,nonlocal_pct\n";
  for (const auto& pt : r.points) {
    const TimingReport& t = pt.mean;
    out << pt.variant << ',' << pt.n << ',' << t.steps << ',' << t.total << ',' << t.per_step()
        << ',' << t.standard_pct() << ',' << t.diffusion_pct() << ',' << t.nonlocal_pct() << '\n';
  }
  out.precision(old_precision);
}

int cmd_bench(const RunConfig& base, const BenchOptions& options, std::ostream& log) {
  const BenchResult result = run_bench(base, options, &log);
  const fs::path dir(base.out_dir);
  fs::create_directories(dir);
  {
    auto out = open_output(dir / "timing.json");
    out << std::setw(2) << nlohmann::json(result) << '\n';
  }
  {
    auto out = open_output(dir / "scaling.csv");
    write_scaling_csv(out, result);
  }
  for (const auto& [variant, slope] : result.per_step_slope) {
    log << variant << ": per-step slope " << slope << ", total slope "
        << result.total_slope.at(variant) << '\n';
  }
  return exit_ok;
}

} // namespace nlldg
