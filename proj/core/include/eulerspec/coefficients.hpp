#ifndef EULERSPEC_COEFFICIENTS_HPP
#define EULERSPEC_COEFFICIENTS_HPP

#include <complex>
#include <vector>

#include "eulerspec/lattice.hpp"

namespace eulerspec {

using Complex = std::complex<double>;

/// Truncation and tolerance knobs shared by the spectral routines.
struct NumericalControls {
  int N0 = 64;                 // initial half-window for per-slice truncations
  int N_max = 1024;            // give up doubling past this half-window
  double eig_tol = 1e-8;       // max eigenvalue movement between N and 2N to accept
  double classify_tol = 1e-6;  // scale of the |Re| threshold for "off-axis"
};

/// Steady-state parameters: direction p and circulation Γ of the two active
/// conjugate modes, plus numerical controls.
struct ProblemInstance {
  LatticeVector p;
  Complex gamma{1.0, 0.0};
  NumericalControls controls;
};

/// Mode-interaction kernel A(p,q) = (1/2)(1/||p||^2 - 1/||q||^2) det(p,q),
/// defined as 0 when p = +-q or either argument is zero. Symmetric in (p,q).
double interaction_coefficient(const LatticeVector& p, const LatticeVector& q);

/// Scalar data of one slice over an index range: coupling beta, unit twist
/// alpha = i*beta/|beta|, and the sequences gamma_n = -||p||^2/||qhat+np||^2,
/// delta_n = sqrt(1+gamma_n) (real or purely imaginary).
struct SliceCoefficients {
  Complex beta;
  Complex alpha;
  LatticeVector p;
  LatticeVector qhat;
  Complex circulation{0.0, 0.0};
  int n_lo = 0;
  int n_hi = 0;
  std::vector<double> gamma;    // gamma[n - n_lo]
  std::vector<Complex> delta;   // delta[n - n_lo]

  IndexWindow range() const { return {n_lo, n_hi}; }
  double gamma_at(int n) const { return gamma[static_cast<std::size_t>(n - n_lo)]; }
  Complex delta_at(int n) const { return delta[static_cast<std::size_t>(n - n_lo)]; }
};

/// Computes the slice scalars over n in [n_range.lo, n_range.hi].
/// Rejects collinear slices (beta would vanish).
SliceCoefficients slice_coefficients(const ProblemInstance& inst, const SliceDescriptor& slice,
                                     IndexWindow n_range);

/// Physical-space steady fields at (x, y): vorticity and the two velocity
/// components. They satisfy div u = 0 and curl u = Omega0.
struct SteadyFields {
  double Omega0 = 0.0;
  double u0 = 0.0;
  double v0 = 0.0;
};

SteadyFields steady_state_fields(const ProblemInstance& inst, double x, double y);

}  // namespace eulerspec

#endif
