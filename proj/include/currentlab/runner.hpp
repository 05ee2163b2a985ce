#pragma once

#include <string>
#include <vector>

#include "currentlab/config.hpp"
#include "currentlab/correlators.hpp"

namespace currentlab {

struct AssertionResult {
  std::string name;
  bool checked = false;  // false: reported only (no contract at this setup)
  bool pass = true;
  double value = 0.0;
  double threshold = 0.0;
};

struct StageTiming {
  std::string name;
  double seconds = 0.0;
};

// Everything a run produces in memory; persisted as grid.csv,
// decay_report.json, manifest.json and decay_plot.svg.
struct RunResult {
  ExperimentConfig config;
  CorrelationGrid grid;
  DecayReport report;
  LrFit lr_fit;
  double current = 0.0;
  double invariance_deviation = 0.0;
  double t_max = 0.0;
  double max_sum_rule_drift = 0.0;          // within horizon
  double max_overshoot_drift = 0.0;         // beyond horizon (diagnostic)
  std::vector<AssertionResult> assertions;
  std::vector<StageTiming> timings;
  bool numerical_failure = false;

  const AssertionResult* find_assertion(const std::string& name) const;
};

enum class RunMode { Full, SumRuleOnly, LrFitOnly };

// Executes the pipeline (model -> state -> propagator -> grid -> reports).
// Pure computation; no files touched.
RunResult run_experiment(const ExperimentConfig& config, RunMode mode = RunMode::Full);

// Writes grid.csv / decay_report.json / manifest.json / decay_plot.svg into
// config.output_dir (created if needed). Returns the manifest JSON text.
std::string write_artifacts(const RunResult& result, const std::string& output_dir);

struct SweepPoint {
  std::string label;
  ExperimentConfig config;
  bool failed = false;
  std::string error;
  RunResult result;
};
struct SweepSummary {
  std::vector<SweepPoint> points;
  std::string csv;  // one row per point, fixed order
};
SweepSummary run_sweep(const SweepConfig& sweep);
void write_sweep_artifacts(SweepSummary& summary, const std::string& output_dir);

}  // namespace currentlab
