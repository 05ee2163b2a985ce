#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "currentlab/dynamics.hpp"
#include "currentlab/models.hpp"

namespace currentlab {

enum class StateKind { Pure, Mixed };

// Pure vector or sector-blocked density matrix, with verification metadata.
// States are immutable after the verification fields are filled.
struct QuantumState {
  StateKind kind = StateKind::Mixed;
  SectorBasisPtr basis;
  Eigen::VectorXcd vector;   // pure
  BlockedOperator density;   // mixed
  std::string recipe;
  double invariance_deviation = -1.0;            // filled by verification
  std::vector<double> bond_currents;             // filled by measurement

  std::int64_t dim() const { return basis ? basis->full_dim() : 0; }
  // Normalization / hermiticity / positivity-slack invariants; throws on
  // violation.
  void validate() const;
};

// rho = e^{-beta H} / tr e^{-beta H} via the eigendecomposition, with the
// spectrum shifted by its minimum for overflow safety.
QuantumState gibbs_state(const Propagator& prop, double beta);
QuantumState gibbs_state(const OperatorMatrix& hamiltonian, double beta);

// Conjugation by exp(i (2 pi k / L) sum_x chart(x) n(x)) on a ring. Integer k
// keeps the result translationally invariant for both charge conventions.
QuantumState boost_state(const QuantumState& state, int k, const ModelSpec& model,
                         const LatticeSpec& lattice);

// Ground state of H - tilt * J_total; a degenerate bottom eigenspace
// (gap < 1e-10) is returned as its uniform mixture so translation invariance
// survives.
QuantumState current_tilted_ground_state(const BlockedOperator& hamiltonian,
                                         const BlockedOperator& total_current, double tilt);
QuantumState current_tilted_ground_state(const OperatorMatrix& hamiltonian,
                                         const OperatorMatrix& total_current, double tilt);

// Single-particle plane wave at momentum 2 pi k / L on a ring (one up spin /
// one fermion over the polarized background).
QuantumState momentum_eigenstate(const ModelSpec& model, const LatticeSpec& lattice, int k);

// Max-entry norm of [rho, P_T] over periodic axes (mixed), or the deviation
// of |<psi|P_T|psi>| from 1 (pure). Fills state.invariance_deviation.
double verify_translation_invariance(QuantumState& state, const LatticeSpec& lattice);

// <j(0, e_1)>, cross-checked for bond independence across all e_1 bonds;
// fills state.bond_currents. Throws BondVarianceExceeded when the spread
// exceeds uniform_tol.
double measure_current(QuantumState& state, const ModelSpec& model, const LatticeSpec& lattice,
                       double uniform_tol = 1e-9);

// <A> for a local operator (sparse application; no embedding).
Cplx expectation(const QuantumState& state, const LocalOperator& op, const LatticeSpec& lattice);
// tr(rho A) / <psi|A|psi> for a blocked operator on the same basis.
Cplx expectation(const QuantumState& state, const BlockedOperator& op);

}  // namespace currentlab
