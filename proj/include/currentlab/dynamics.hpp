#pragma once

#include <Eigen/Dense>
#include <vector>

#include "currentlab/operator_matrix.hpp"
#include "currentlab/sectors.hpp"

namespace currentlab {

// Eigendecomposition of a Hamiltonian, kept per charge sector. Heisenberg
// evolution reuses one decomposition for every (operator, t) pair.
struct Propagator {
  SectorBasisPtr basis;
  std::vector<Eigen::VectorXd> eigenvalues;   // per sector
  std::vector<Eigen::MatrixXcd> eigenvectors;  // per sector, unitary
  double reconstruction_error = 0.0;
  double unitarity_error = 0.0;

  std::int64_t dim() const { return basis ? basis->full_dim() : 0; }
  double ground_energy() const;
  // Eigenvalues of all sectors concatenated in sector order.
  Eigen::VectorXd all_eigenvalues() const;
};

Propagator make_propagator(const BlockedOperator& hamiltonian);
Propagator make_propagator(const OperatorMatrix& hamiltonian);

// e^{iHt} A e^{-iHt}. The blocked overload requires A on the propagator's
// sector basis; the dense overload accepts any operator (cross-sector
// components are handled by working in the sector-ordered basis).
BlockedOperator heisenberg_evolve(const BlockedOperator& a, const Propagator& p, double t);
OperatorMatrix heisenberg_evolve(const OperatorMatrix& a, const Propagator& p, double t);

// Max-entry norm of alpha_{t+s}(A) - alpha_t(alpha_s(A)); contract < 1e-9.
double evolve_group_property_check(const OperatorMatrix& a, const Propagator& p, double t,
                                   double s);

// Largest |t| for which a ring of size L still mimics the infinite lattice:
// (L/2 - support_radius - margin) / v_est. Throws HorizonNonpositive.
double lr_horizon(double v_est, int length, int support_radius, int margin);

}  // namespace currentlab
