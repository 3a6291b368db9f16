#ifndef EULERSPEC_SPECTRA_HPP
#define EULERSPEC_SPECTRA_HPP

#include <string>
#include <vector>

#include "eulerspec/coefficients.hpp"
#include "eulerspec/lattice.hpp"

namespace eulerspec {

/// Threshold separating "on the imaginary axis" from "off-axis" for a slice
/// with coupling beta: max(classify_tol, classify_tol * |beta|).
double classify_threshold(const NumericalControls& controls, Complex beta);

/// Truncated spectrum of one slice in the L-plane at half-window N (window
/// [-N, N]). Computed from the symmetrized operator B and mapped by
/// lambda = -i|beta| z, then cross-checked against a direct eigensolve of the
/// L build; the two paths must agree off zero to 1e-8|beta|. Collinear slices
/// return {0}; Gamma = 0 returns all zeros.
std::vector<Complex> slice_spectrum(const ProblemInstance& inst, const SliceDescriptor& slice,
                                    int N);

struct SliceSpectrumEntry {
  SliceDescriptor slice;
  Complex beta{0.0, 0.0};
  std::vector<Complex> eigenvalues;  // full truncated spectrum at final_N
  std::vector<Complex> off_axis;     // |Re lambda| above the classify threshold
  int final_N = 0;
  bool converged = false;
  double residual = 0.0;  // off-axis movement between the last two windows
};

struct NonimaginaryEigenvalue {
  Complex lambda;
  int multiplicity = 1;
  LatticeVector qhat;  // slice whose spectrum first produced the cluster
};

struct SpectrumReport {
  ProblemInstance instance;
  std::vector<SliceSpectrumEntry> per_slice;
  std::vector<NonimaginaryEigenvalue> nonimaginary;
  int kappa = 0;
  bool bound_ok = false;
  bool symmetry_ok = false;
  bool all_converged = false;

  int nonimaginary_count() const;  // with multiplicity
  /// Spectral abscissa proxy: max Re over nonimaginary clusters, 0 if none.
  double max_real_part() const;
};

/// Runs the window-doubling convergence loop over every contributing slice,
/// aggregates off-axis eigenvalues into clusters, and checks the 2*kappa
/// count bound and four-fold symmetry.
SpectrumReport nonimaginary_spectrum(const ProblemInstance& inst);

/// True iff the multiset is invariant under both lambda -> -lambda and
/// lambda -> conj(lambda) within tol (optimal matching).
bool check_symmetry(const std::vector<Complex>& eigs, double tol);

/// Predicted essential spectrum of one slice: i[-2|beta|, 2|beta|].
struct EssentialInterval {
  double beta_abs = 0.0;
  double endpoint() const { return 2.0 * beta_abs; }
};

EssentialInterval essential_interval(const ProblemInstance& inst, const SliceDescriptor& slice);

/// For a slice with ||qhat|| > ||p|| (Hermitian symmetrized build): largest
/// uncovered gap of the truncated B-spectrum inside [-2, 2], including the
/// distance from the extreme eigenvalues to the endpoints. Decays like 1/N.
double essential_coverage(const ProblemInstance& inst, const SliceDescriptor& slice, int N);

/// 1/sigma_min((a + i tau) I - L) over the box truncation, one value per tau.
std::vector<double> resolvent_norm_samples(const ProblemInstance& inst, int K, double a,
                                           const std::vector<double>& taus);

/// Multiset comparison of the box operator's spectrum against the union of
/// windowed per-slice spectra (exact block diagonalization at finite size).
struct DecompositionReport {
  bool match = false;
  int dim = 0;
  int n_slices = 0;
  int collinear_modes = 0;
  int zero_count_full = 0;
  int zero_count_union = 0;
  double zero_cutoff = 0.0;      // |lambda| below this counts as the zero cluster
  double off_zero_max_dist = 0.0;
  double tol = 0.0;
  std::vector<std::string> diffs;  // populated on mismatch
};

DecompositionReport decomposition_crosscheck(const ProblemInstance& inst, int K);

}  // namespace eulerspec

#endif
