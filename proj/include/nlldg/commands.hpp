#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlldg/analysis.hpp"
#include "nlldg/config.hpp"
#include "nlldg/time_integration.hpp"

namespace nlldg {

/// Process exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_config = 2, exit_numerical = 3 };

/// Summary document written by `simulate`.
nlohmann::json simulation_summary(const RunConfig& config, const SimulationResult& result);

/// Writes snapshot_<i>.csv, final.csv and summary.json into config.out_dir.
/// Returns exit_numerical if the run blew up, exit_ok otherwise.
int cmd_simulate(const RunConfig& config, std::ostream& log);

struct ConvergenceRow {
  int p = 0;
  int n = 0;
  int dof = 0;
  double l2_error = 0.0;
  double cpu_seconds = 0.0;
  bool failed = false;
};

struct ConvergenceTable {
  int reference_p = 4;
  int reference_n = 640;
  double reference_seconds = 0.0;
  std::vector<ConvergenceRow> rows;
  /// Rate between the coarsest and finest mesh of each degree.
  std::map<int, double> rates;
  /// Largest relative mass drift over all runs.
  double max_mass_drift = 0.0;
};

struct ConvergenceOptions {
  std::vector<int> degrees{1, 2, 3};
  std::vector<int> meshes{20, 40, 80, 160, 320};
  int reference_p = 4;
  int reference_n = 640;
  int repeats = 1;
};

/// Runs the reference once, then every (p, n) of the grid with the
/// scenario, beta, T and model of `base`.
ConvergenceTable run_convergence(const RunConfig& base, const ConvergenceOptions& options,
                                 std::ostream* log = nullptr);

/// Columns: p,n,dof,l2_error,cpu_seconds,rate,status. `rate` repeats the
/// degree's rate on each of its rows.
void write_convergence_csv(std::ostream& out, const ConvergenceTable& table);

int cmd_convergence(const RunConfig& base, const ConvergenceOptions& options, std::ostream& log);

/// Timing of one model variant at one resolution, averaged over repeats.
struct BenchPoint {
  std::string variant;
  int n = 0;
  TimingReport mean;
};

struct BenchResult {
  int p = 0;
  int repeats = 0;
  std::vector<BenchPoint> points;
  /// log-log slope of seconds per step against n, per variant.
  std::map<std::string, double> per_step_slope;
  /// log-log slope of total run time against n, per variant.
  std::map<std::string, double> total_slope;
  /// full / nonlocal total time, per n.
  std::map<int, double> diffusion_ratio;

  const BenchPoint* find(const std::string& variant, int n) const;
};

struct BenchOptions {
  std::vector<int> meshes{20, 40, 80, 160, 320};
  std::vector<std::string> variants{"full", "nonlocal", "local"};
  int repeats = 20;
};

/// Variants: "full" (gamma, kappa of base), "nonlocal" (gamma, kappa = 0),
/// "local" (gamma = kappa = 0).
BenchResult run_bench(const RunConfig& base, const BenchOptions& options,
                      std::ostream* log = nullptr);

void to_json(nlohmann::json& j, const BenchResult& result);

/// Columns: variant,n,steps,total_seconds,seconds_per_step,standard_pct,diffusion_pct,nonlocal_pct.
void write_scaling_csv(std::ostream& out, const BenchResult& result);

int cmd_bench(const RunConfig& base, const BenchOptions& options, std::ostream& log);

} // namespace nlldg
