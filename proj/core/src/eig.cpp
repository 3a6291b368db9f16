#include "eulerspec/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace eulerspec {

namespace {

void require_square(const Eigen::MatrixXcd& a, const char* who) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
  if (!a.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace

DenseEigResult eig_dense(const Eigen::MatrixXcd& a, bool with_vectors) {
  require_square(a, "eig_dense");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  DenseEigResult r;
  r.values.resize(static_cast<std::size_t>(n));
  if (n == 0) return r;

  Eigen::MatrixXcd work = a;  // zgeev overwrites its input
  if (with_vectors) r.vectors.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N', n, work.data(), n, r.values.data(),
      nullptr, 1, with_vectors ? r.vectors.data() : nullptr, with_vectors ? n : 1);
  if (info < 0) throw std::invalid_argument("eig_dense: bad argument to zgeev");
  if (info > 0) {
    r.converged = false;
    r.n_converged = static_cast<int>(n - info);  // values[info..n) converged
  } else {
    r.n_converged = static_cast<int>(n);
  }
  return r;
}

std::vector<Complex> eig_values(const Eigen::MatrixXcd& a) {
  DenseEigResult r = eig_dense(a, false);
  if (!r.converged)
    throw EigNonConvergence("eig_values: QR iteration did not converge for all eigenvalues");
  std::sort(r.values.begin(), r.values.end(), [](const Complex& u, const Complex& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return r.values;
}

std::vector<double> eig_hermitian_values(const Eigen::MatrixXcd& a) {
  require_square(a, "eig_hermitian_values");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  Eigen::MatrixXcd work = a;
  const lapack_int info =
      LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
  if (info < 0) throw std::invalid_argument("eig_hermitian_values: bad argument to zheev");
  if (info > 0) throw EigNonConvergence("eig_hermitian_values: zheev did not converge");
  return w;
}

double smallest_singular_value(const Eigen::MatrixXcd& a, std::uint64_t seed) {
  require_square(a, "smallest_singular_value");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return 0.0;

  Eigen::MatrixXcd lu = a;
  std::vector<lapack_int> piv(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lu.data(), n, piv.data());
  if (info < 0) throw std::invalid_argument("smallest_singular_value: bad argument to zgetrf");
  if (info > 0) return 0.0;  // exactly singular pivot

  // Power iteration on (A^H A)^{-1} = A^{-1} A^{-H}: each step solves with
  // A^H then A; the dominant value is 1/sigma_min^2.
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  };
  Eigen::VectorXcd x(n);
  for (lapack_int i = 0; i < n; ++i) {
    // Box-Muller, avoiding implementation-defined std::normal_distribution
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    x[i] = Complex(r * std::cos(t), r * std::sin(t));
  }
  x.normalize();

  double sigma = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    Eigen::VectorXcd y = x;
    LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'C', n, 1, lu.data(), n, piv.data(), y.data(), n);
    LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, 1, lu.data(), n, piv.data(), y.data(), n);
    const double growth = y.norm();  // since ||x|| = 1
    if (growth == 0.0) return 0.0;
    const double next = 1.0 / std::sqrt(growth);
    x = y / growth;
    if (iter > 3 && std::abs(next - sigma) <= 1e-12 * next) return next;
    sigma = next;
  }
  return sigma;
}

}  // namespace eulerspec
