#pragma once

#include <string>
#include <vector>

#include "currentlab/lattice.hpp"
#include "currentlab/local_operator.hpp"
#include "currentlab/operator_matrix.hpp"
#include "currentlab/sectors.hpp"

namespace currentlab {

enum class ModelFamily { Xxz, TvFermion };

// Nearest-neighbor model family on spin-1/2 sites.
//   xxz:        h = S1.S1 + S2.S2 + lambda S3.S3,  charge n = S3
//   tv_fermion: h = -T(c+ c + c c+) + V n n mapped through Jordan-Wigner,
//               which on an open chain is -2T(S1.S1 + S2.S2) + V n n with
//               n = S3 + 1/2 (the string cancels on nearest neighbors).
struct ModelSpec {
  ModelFamily family = ModelFamily::Xxz;
  double lambda = 0.0;  // xxz anisotropy
  double hopping = 0.0;  // tv_fermion T
  double interaction = 0.0;  // tv_fermion V

  static ModelSpec xxz(double lambda);
  static ModelSpec tv_fermion(double hopping, double interaction);

  std::string describe() const;
  // Largest coupling magnitude entering bond terms; used for the default
  // group-velocity estimate 4*max_coupling.
  double max_coupling() const;
};

LocalOperator build_charge(const ModelSpec& model, const LatticeSpec& lattice, const Coord& site);
LocalOperator build_bond_term(const ModelSpec& model, const LatticeSpec& lattice, const Bond& bond);
LocalOperator build_current(const ModelSpec& model, const LatticeSpec& lattice, const Bond& bond);

// Per-basis-state total charge (diagonal of N_Lambda).
Eigen::VectorXd charge_diagonal(const ModelSpec& model, const LatticeSpec& lattice,
                                std::int64_t dim_cap = kDefaultDimCap);
// Charge sectors of the model on the lattice.
SectorBasisPtr charge_sectors(const ModelSpec& model, const LatticeSpec& lattice,
                              std::int64_t dim_cap = kDefaultDimCap);

// H_Lambda = sum of embedded bond terms over all bonds (wrap bonds included
// on periodic axes). Periodic tv_fermion lattices are rejected: the
// Jordan-Wigner image of the wrap bond carries a total-parity string that
// the two-site matrix cannot represent.
OperatorMatrix assemble_hamiltonian(const ModelSpec& model, const LatticeSpec& lattice,
                                    std::int64_t dim_cap = kDefaultDimCap);
BlockedOperator assemble_hamiltonian_blocked(const ModelSpec& model, const LatticeSpec& lattice,
                                             const SectorBasisPtr& basis);
// Total charge N_Lambda and total e_1 current, blocked.
BlockedOperator total_charge_blocked(const ModelSpec& model, const LatticeSpec& lattice,
                                     const SectorBasisPtr& basis);
BlockedOperator total_current_blocked(const ModelSpec& model, const LatticeSpec& lattice,
                                      const SectorBasisPtr& basis);

// Validates the fermion <-> spin equivalence on an open chain: spectra of the
// directly constructed Fock-space t-V Hamiltonian versus the Jordan-Wigner
// spin image must agree as multisets.
struct JordanWignerReport {
  std::vector<double> fermion_spectrum;
  std::vector<double> spin_spectrum;
  double max_deviation = 0.0;
  bool pass = false;
};
JordanWignerReport jordan_wigner_check(const LatticeSpec& lattice, double hopping,
                                       double interaction);

}  // namespace currentlab
