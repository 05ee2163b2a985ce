#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "currentlab/lattice.hpp"
#include "currentlab/models.hpp"

namespace currentlab {

enum class StateRecipe { Gibbs, BoostedGibbs, TiltedGround, MomentumEigenstate };

struct StateConfig {
  StateRecipe kind = StateRecipe::Gibbs;
  double beta = 1.0;
  int boost_k = 0;
  double tilt = 0.0;
};

struct GridConfig {
  int t_count = 13;           // samples uniform on [0, t_max]
  std::string z_chart = "full";  // "full" | "radius"
  double z_radius = 0.0;         // used when z_chart == "radius"
  int margin = 2;                // lr_horizon margin, lattice sites
  double v_est = 0.0;            // 0 = default 4 * max coupling
  double t_overshoot = 0.0;      // extend sampling to (1 + overshoot) * t_max
  bool with_norms = true;
};

struct ToleranceConfig {
  double sum_rule_tol = 1e-6;
  double sum_rule_t0_tol = 1e-9;
  double invariance_tol = 1e-9;
  double bond_uniform_tol = 1e-9;
  double margin_tol = 1e-8;
  double imaginary_tol = 1e-10;
};

struct ExperimentConfig {
  ModelSpec model;
  LatticeSpec lattice{1, {4}, {Boundary::Periodic}};
  StateConfig state;
  GridConfig grid;
  ToleranceConfig tolerances;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  std::int64_t dim_cap = kDefaultDimCap;
  int workers = 1;
};

// Parses and validates a config JSON document; collects every violation
// rather than stopping at the first.
struct ConfigResult {
  std::optional<ExperimentConfig> config;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && config.has_value(); }
};
ConfigResult parse_experiment_config(const std::string& json_text);
ConfigResult load_experiment_config(const std::string& path);

// Environment overrides (workers, dim cap), applied after parsing.
void apply_env_overrides(ExperimentConfig& config);

std::string config_to_json(const ExperimentConfig& config);

// Sweep description: a base config plus axes expanded as a cartesian product.
struct SweepConfig {
  ExperimentConfig base;
  std::vector<int> lengths;      // lattice sides[0]
  std::vector<double> betas;
  std::vector<int> boost_ks;
  std::vector<double> lambdas;   // xxz anisotropy
  std::vector<double> tilts;
  int workers = 1;
  std::string output_dir = "sweep";
};
struct SweepConfigResult {
  std::optional<SweepConfig> config;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && config.has_value(); }
};
SweepConfigResult load_sweep_config(const std::string& path);

}  // namespace currentlab
