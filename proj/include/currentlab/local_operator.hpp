#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "currentlab/lattice.hpp"

namespace currentlab {

using Cplx = std::complex<double>;

// Spin-1/2 single-site operators. Local basis: index 0 = up (S3 = +1/2),
// which doubles as "occupied" for the fermion mapping.
Eigen::Matrix2cd spin_sx();
Eigen::Matrix2cd spin_sy();
Eigen::Matrix2cd spin_sz();
Eigen::Matrix2cd site_number();  // diag(1, 0)

// An operator acting on an ordered list of lattice sites, stored as a dense
// (local_dim)^|support| matrix. Tensor ordering follows the support list.
struct LocalOperator {
  std::vector<Coord> support;
  Eigen::MatrixXcd matrix;
  int local_dim = 2;
  bool hermitian = false;

  Eigen::Index dim() const { return matrix.rows(); }

  // Checks the type invariants (dimension consistency, distinct support
  // inside the lattice, hermiticity when flagged). Throws on violation.
  void validate(const LatticeSpec& lattice) const;
};

// op_a on site_a tensor op_b on site_b (in that support order).
LocalOperator two_site_op(const Eigen::Matrix2cd& op_a, Coord site_a,
                          const Eigen::Matrix2cd& op_b, Coord site_b, bool hermitian);
LocalOperator one_site_op(const Eigen::Matrix2cd& op, Coord site, bool hermitian);

}  // namespace currentlab
