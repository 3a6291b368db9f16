#ifndef EULERSPEC_EIG_HPP
#define EULERSPEC_EIG_HPP

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eulerspec/coefficients.hpp"

namespace eulerspec {

/// QR iteration gave up before all eigenvalues converged.
struct EigNonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DenseEigResult {
  std::vector<Complex> values;  // when !converged only the tail [n - n_converged, n) is valid
  Eigen::MatrixXcd vectors;     // right eigenvectors as columns, if requested
  bool converged = true;
  int n_converged = 0;
};

/// General dense eigensolve (Hessenberg + shifted QR via LAPACK zgeev).
/// Values are in LAPACK's native order so they stay paired with the vectors.
DenseEigResult eig_dense(const Eigen::MatrixXcd& a, bool with_vectors = false);

/// All eigenvalues sorted by (re, im); throws EigNonConvergence on failure.
std::vector<Complex> eig_values(const Eigen::MatrixXcd& a);

/// Hermitian eigensolve (LAPACK zheev), ascending. Uses only the lower triangle.
std::vector<double> eig_hermitian_values(const Eigen::MatrixXcd& a);

/// Smallest singular value via LU factorization plus inverse power iteration
/// on (A^H A)^{-1}, with a seeded deterministic start vector. Returns 0 for a
/// numerically singular factorization.
double smallest_singular_value(const Eigen::MatrixXcd& a, std::uint64_t seed = 0x00e5feed);

}  // namespace eulerspec

#endif
