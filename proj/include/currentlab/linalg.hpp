#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace currentlab {

// LAPACK zheevd behind an Eigen interface. `vectors=false` computes
// eigenvalues only. Input must be Hermitian (not checked here).
struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;  // empty when eigenvalues-only
};
HermitianEigen hermitian_eigensolve(const Eigen::MatrixXcd& a, bool vectors = true);

double max_abs(const Eigen::MatrixXcd& a);
double max_abs(const Eigen::VectorXcd& v);

// Largest singular value. Dense route (eigenvalues of A^dagger A) up to
// `dense_threshold`; power iteration with a fixed deterministic start above
// it (tolerance 1e-10 on the value, max 10^4 sweeps). Throws
// ConvergenceFailure if the iteration stalls, so callers can fall back to
// the dense route explicitly.
double spectral_norm_dense_or_power(const Eigen::MatrixXcd& a,
                                    Eigen::Index dense_threshold = 4096);

// Power-iteration piece exposed for tests.
double spectral_norm_power(const Eigen::MatrixXcd& a, double tol = 1e-10,
                           int max_iterations = 10000);

// Largest |eigenvalue| of a Hermitian operator given only its action on
// vectors. Lanczos with full reorthogonalization and a deterministic start;
// falls back on the caller if `converged` comes back false.
struct LanczosResult {
  double extremal_abs = 0.0;
  bool converged = false;
  int iterations = 0;
};
LanczosResult lanczos_extremal_abs(
    Eigen::Index dim, const std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>& apply,
    double tol = 1e-11, int max_steps = 256, std::uint64_t seed = 0x9e3779b97f4a7c15ull);

}  // namespace currentlab
