#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "currentlab/local_operator.hpp"

namespace currentlab {

// Partition of the computational basis into eigenspaces of a diagonal charge.
// A single-sector basis ("whole") recovers the plain dense representation,
// so the pipeline code runs identically blocked and unblocked.
class SectorBasis {
 public:
  static std::shared_ptr<const SectorBasis> from_diagonal(const Eigen::VectorXd& charges);
  static std::shared_ptr<const SectorBasis> whole(std::int64_t dim);

  int sector_count() const { return static_cast<int>(states_.size()); }
  double label(int s) const { return labels_[s]; }
  const std::vector<std::int64_t>& states(int s) const { return states_[s]; }
  std::int64_t sector_dim(int s) const { return static_cast<std::int64_t>(states_[s].size()); }
  std::int64_t full_dim() const { return full_dim_; }
  int sector_of(std::int64_t basis_index) const { return sector_of_[basis_index]; }
  std::int64_t position(std::int64_t basis_index) const { return position_[basis_index]; }
  bool trivial() const { return sector_count() == 1; }

 private:
  std::vector<double> labels_;
  std::vector<std::vector<std::int64_t>> states_;
  std::vector<int> sector_of_;
  std::vector<std::int64_t> position_;
  std::int64_t full_dim_ = 0;
};

using SectorBasisPtr = std::shared_ptr<const SectorBasis>;

// Block-diagonal operator over a SectorBasis. Only the diagonal blocks are
// stored; everything in the pipeline (H, rho, charge, bond terms, currents)
// conserves the total charge, which sector construction checks up front.
struct BlockedOperator {
  SectorBasisPtr basis;
  std::vector<Eigen::MatrixXcd> blocks;

  std::int64_t dim() const { return basis ? basis->full_dim() : 0; }
  Eigen::MatrixXcd to_dense() const;
  BlockedOperator& operator+=(const BlockedOperator& other);
};

BlockedOperator zero_blocked(const SectorBasisPtr& basis);
BlockedOperator identity_blocked(const SectorBasisPtr& basis);

// Embeds a local operator (tensored with identity elsewhere) directly into
// sector blocks. Throws NotCharged if the operator maps any basis state out
// of its sector.
BlockedOperator embed_blocked(const LocalOperator& op, const LatticeSpec& lattice,
                              const SectorBasisPtr& basis);

// Adds the embedding of `op` into existing blocks (used for Hamiltonian
// assembly without temporaries).
void accumulate_embedded(BlockedOperator& target, const LocalOperator& op,
                         const LatticeSpec& lattice, Cplx weight = Cplx(1, 0));

// Conjugation by a diagonal unitary given as full-dimension phases.
BlockedOperator conjugate_by_diagonal(const BlockedOperator& a, const Eigen::VectorXcd& phases);

// Basis permutation conjugation: P A P^T with P the permutation sending basis
// state k to perm[k]. The permutation must preserve sectors.
BlockedOperator conjugate_by_permutation(const BlockedOperator& a,
                                         const std::vector<std::int64_t>& perm);

double max_abs(const BlockedOperator& a);

}  // namespace currentlab
