#ifndef EULERSPEC_OPERATORS_HPP
#define EULERSPEC_OPERATORS_HPP

#include <Eigen/Core>
#include <map>
#include <vector>

#include "eulerspec/coefficients.hpp"
#include "eulerspec/lattice.hpp"

namespace eulerspec {

enum class TridiagonalKind { Lq, M0, Mq, Bq };

/// Finite window [n_lo, n_hi] of one of the zero-diagonal two-band operators.
/// Entry layout: sub[j] sits at (row n_lo+j+1, col n_lo+j), super[j] at
/// (row n_lo+j, col n_lo+j+1); the action is
///   (T w)_n = sub_{n-1} w_{n-1} + super_n w_{n+1}.
struct TridiagonalOperator {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<Complex> sub;
  std::vector<Complex> diag;  // kept for the dump format; identically zero here
  std::vector<Complex> super;
  TridiagonalKind kind = TridiagonalKind::M0;
  // provenance of the build, for reports
  LatticeVector p;
  LatticeVector qhat;
  Complex circulation{0.0, 0.0};
  Complex beta{0.0, 0.0};

  int size() const { return n_hi - n_lo + 1; }
  IndexWindow window() const { return {n_lo, n_hi}; }
  Eigen::MatrixXcd to_dense() const;
};

/// Free hopping operator: (M0 w)_n = alpha w_{n-1} + conj(alpha) w_{n+1}.
/// Requires |alpha| = 1.
TridiagonalOperator build_M0(Complex alpha, IndexWindow window);

/// B = diag(delta) M0 diag(delta), entrywise.
TridiagonalOperator build_Bq(const SliceCoefficients& coeffs, IndexWindow window);

/// (Mq w)_n = alpha (1+gamma_{n-1}) w_{n-1} + conj(alpha)(1+gamma_{n+1}) w_{n+1}.
TridiagonalOperator build_Mq(const SliceCoefficients& coeffs, IndexWindow window);

/// (Lq w)_n = beta (1+gamma_{n-1}) w_{n-1} - conj(beta)(1+gamma_{n+1}) w_{n+1};
/// satisfies Lq = -i|beta| Mq entrywise.
TridiagonalOperator build_Lq(const SliceCoefficients& coeffs, IndexWindow window);

/// Diagonal of +-1: +1 exactly on the in-disk indices of the slice.
struct SignatureOperator {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<int> signs;

  int size() const { return n_hi - n_lo + 1; }
  int sign_at(int n) const { return signs[static_cast<std::size_t>(n - n_lo)]; }
};

/// Requires slice.disk_window to be present and contained in window.
SignatureOperator build_signature(const SliceDescriptor& slice, IndexWindow window);

/// The coupling operator on the punctured sup-norm box {k : 0 < ||k||_inf <= K}:
/// row k has entries A(p, k-p) Gamma at column k-p and A(-p, k+p) conj(Gamma)
/// at column k+p (couplings leaving the box are dropped).
struct BoxOperator2D {
  struct Entry {
    int col;
    Complex value;
  };

  int K = 0;
  LatticeVector p;
  Complex circulation{0.0, 0.0};
  std::vector<LatticeVector> modes;            // index -> k, lexicographic
  std::map<LatticeVector, int> mode_index;     // k -> index
  std::vector<std::vector<Entry>> rows;        // <= 2 entries per row

  int dim() const { return static_cast<int>(modes.size()); }
  /// y = L x over the mode indexing.
  void apply(const Complex* x, Complex* y) const;
  Eigen::MatrixXcd to_dense() const;
  /// sqrt(||L||_1 ||L||_inf) >= spectral norm; used for step-size guards.
  double norm_upper_bound() const;
};

/// Requires K >= ||p||_inf + 1 so that at least one coupled pair fits the box.
BoxOperator2D build_L2D(const ProblemInstance& inst, int K);

}  // namespace eulerspec

#endif
