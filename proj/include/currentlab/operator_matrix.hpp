#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "currentlab/lattice.hpp"
#include "currentlab/local_operator.hpp"

namespace currentlab {

constexpr std::int64_t kDefaultDimCap = std::int64_t(1) << 16;

// A sector block (charge eigenvalue, basis index set, dense block).
struct SectorBlock {
  double charge;
  std::vector<std::int64_t> indices;
  Eigen::MatrixXcd matrix;
};

// Dense operator on the full Hilbert space, optionally carrying a charge
// block decomposition produced by sector_decompose.
struct OperatorMatrix {
  Eigen::MatrixXcd matrix;
  std::vector<SectorBlock> sector_blocks;

  Eigen::Index dim() const { return matrix.rows(); }
  bool has_blocks() const { return !sector_blocks.empty(); }

  // Max-entry distance between `matrix` and the reassembled blocks.
  double block_reassembly_error() const;
};

// op tensor identity on the rest of the lattice, under the row-major
// site-0-most-significant ordering convention.
OperatorMatrix embed(const LocalOperator& op, const LatticeSpec& lattice,
                     std::int64_t dim_cap = kDefaultDimCap);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Operator (largest singular value) norm; see linalg.hpp for the method
// split between the dense and power-iteration routes.
double spectral_norm(const OperatorMatrix& a);
double spectral_norm(const Eigen::MatrixXcd& a);
double spectral_norm(const LocalOperator& a);

// Groups the basis by eigenvalue of the diagonal charge N and fills
// sector_blocks. Requires [A, N] = 0 to `commute_tol` (max-entry), else
// throws NotCharged.
OperatorMatrix sector_decompose(const OperatorMatrix& a, const OperatorMatrix& n,
                                double commute_tol = 1e-10);

}  // namespace currentlab
