#pragma once

#include <complex>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "currentlab/dynamics.hpp"
#include "currentlab/models.hpp"
#include "currentlab/states.hpp"

namespace currentlab {

struct GridEntry {
  Coord z;
  int axis = 0;  // 0-based (axis 0 is e_1)
  double t = 0.0;
  Cplx c{};          // <[n(0), alpha_t(h(z, z+e_r))]>
  Cplx c_truncated{};  // <n(0) alpha_t(h)> - <n(0)><alpha_t(h)>
  double comm_norm = 0.0;
  bool beyond_horizon = false;
};

// Sampled C_r(z, t) over a (z, axis, t) grid, with provenance. Entry order is
// fixed: displacements (row-major chart order) x axes x times.
struct CorrelationGrid {
  std::vector<Coord> displacements;
  std::vector<int> axes;
  std::vector<double> times;
  std::vector<GridEntry> entries;

  std::string model;
  std::string lattice;
  std::string state_recipe;
  double t_max = 0.0;
  double v_est = 0.0;
  bool full_chart = true;  // covers every chart displacement

  const GridEntry& at(std::size_t iz, std::size_t ia, std::size_t it) const;
  std::size_t index(std::size_t iz, std::size_t ia, std::size_t it) const;
};

struct LrFit {
  double c_lr = 0.0;
  double v_lr = 0.0;
  int points_used = 0;
  double norm_charge = 0.0;
  double norm_bond = 0.0;
  std::vector<double> residuals;  // log-envelope minus log-sample, >= 0 after inflation
};

struct DecayReport {
  std::vector<double> times;
  std::vector<Cplx> weighted_sum;    // S(t)
  std::vector<double> absolute_sum;  // W(t)
  std::vector<double> bound_rhs;
  std::vector<double> margin;        // W(t) - bound_rhs(t)
  double current = 0.0;              // <j(0, e_1)>
  double epsilon = 0.0;
  int tail_n = 0;
  double v_lr = 0.0;
  bool trivial_bound = false;  // |current| below floor: rhs clipped to <= 0
};

// Computes grid entries in the Hamiltonian eigenbasis: one transform of
// h(z, z+e_r) per (z, r), then O(dim_sector^2) phase-weighted reductions per
// time sample. t = 0 entries use exact local commutators instead (so
// disjoint-support zeros are exact). Values are identical either way up to
// rounding.
class CorrelatorEngine {
 public:
  CorrelatorEngine(const ModelSpec& model, const LatticeSpec& lattice, const Propagator& prop,
                   const QuantumState& state);

  // with_norms: also fill comm_norm (Lanczos per sector; dense fallback).
  CorrelationGrid compute(const std::vector<Coord>& displacements, const std::vector<int>& axes,
                          const std::vector<double>& times, double t_max, bool with_norms,
                          int workers = 1) const;

  Cplx commutator_correlation(const Coord& z, int axis, double t,
                              double t_max = std::numeric_limits<double>::infinity()) const;
  Cplx truncated_correlation(const Coord& z, int axis, double t,
                             double t_max = std::numeric_limits<double>::infinity()) const;
  double comm_norm(const Coord& z, int axis, double t) const;

  double charge_norm() const { return charge_norm_; }
  double bond_norm(int axis) const { return bond_norms_[axis]; }

 private:
  struct ZColumn;  // per-(z, axis) eigenbasis data
  ZColumn make_column(const Coord& z, int axis) const;
  void fill_column_values(const ZColumn& col, const std::vector<double>& times, double t_max,
                          bool with_norms, std::vector<GridEntry>& out) const;
  Cplx phase_weighted_trace(const std::vector<Eigen::MatrixXcd>& kernel, double t) const;
  double blocked_comm_norm(const ZColumn& col, double t) const;

  const ModelSpec model_;
  const LatticeSpec lattice_;
  const Propagator& prop_;
  const QuantumState& state_;
  bool pure_;
  std::vector<Eigen::VectorXcd> psi_tilde_;          // pure states, per sector
  std::vector<Eigen::MatrixXcd> rho_tilde_;          // mixed states, per sector
  std::vector<Eigen::MatrixXcd> charge0_tilde_;      // n(0) in eigenbasis
  Cplx charge0_expectation_;
  double charge_norm_ = 0.0;
  std::vector<double> bond_norms_;
};

// Free-function forms of the three per-entry operations.
Cplx commutator_correlation(const QuantumState& state, const ModelSpec& model,
                            const LatticeSpec& lattice, const Propagator& prop, const Coord& z,
                            int axis, double t,
                            double t_max = std::numeric_limits<double>::infinity());
Cplx truncated_correlation(const QuantumState& state, const ModelSpec& model,
                           const LatticeSpec& lattice, const Propagator& prop, const Coord& z,
                           int axis, double t,
                           double t_max = std::numeric_limits<double>::infinity());

// S(t) = i sum_z { (z_1 + 1/2) C(z, e_1, t) + sum_{r>=2} z_1 C(z, e_r, t) }.
// Requires a full chart; throws IncompleteGrid otherwise.
std::vector<Cplx> weighted_sum_rule(const CorrelationGrid& grid);

// W(t) = sum_{r, z} |C(z, r, t)|.
std::vector<double> absolute_sum(const CorrelationGrid& grid);

// Smallest N with tail mass eps(N) = max_t sum_{|z| > v_lr t + N} (|z_1|+1/2)
// sum_r |C| below epsilon_fraction * |j|. Throws TailTooHeavy when |j| is
// resolvable but no N inside the chart works.
struct TailParameters {
  double epsilon = 0.0;
  int n = 0;
  bool trivial = false;  // |j| below floor; bound vacuous
};
TailParameters compute_tail_parameters(const CorrelationGrid& grid, double current, double v_lr,
                                       double epsilon_fraction = 0.1,
                                       double current_floor = 1e-9);

// margin(t) = W(t) - (|j| - eps) / (v_lr |t| + N + 1/2) on the in-horizon
// samples; the theorem surrogate asserts margin >= -1e-8.
DecayReport decay_bound_check(const CorrelationGrid& grid, double current, double epsilon,
                              int tail_n, double v_lr, bool trivial_bound = false);

// Least-squares fit of log comm_norm <= log(C ||n|| ||h||) - |z| + V t over
// samples above `threshold`, followed by the minimal inflation of C that
// makes the envelope dominate every computed point. Throws InsufficientData
// below 6 usable points.
LrFit lr_norm_profile_and_fit(const CorrelationGrid& grid, double norm_charge, double norm_bond,
                              double threshold = 1e-8);

}  // namespace currentlab
