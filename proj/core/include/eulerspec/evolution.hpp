#ifndef EULERSPEC_EVOLUTION_HPP
#define EULERSPEC_EVOLUTION_HPP

#include <cstdint>
#include <vector>

#include "eulerspec/operators.hpp"
#include "eulerspec/spectra.hpp"

namespace eulerspec {

/// Vorticity amplitudes over the punctured box, indexed like
/// BoxOperator2D::modes for the same K.
struct StateVector {
  int K = 0;
  std::vector<Complex> values;

  double norm() const;
};

/// Seeded unit-variance complex Gaussian per mode, then conjugate-symmetrized
/// so that omega_{-k} = conj(omega_k) exactly.
StateVector random_state(int K, std::uint64_t seed);

struct Trajectory {
  std::vector<double> times;   // strictly increasing, starts at 0
  std::vector<double> norms;   // ||omega(t)|| at every step
  std::vector<double> snapshot_times;
  std::vector<StateVector> snapshots;  // per snapshot_stride steps + final state
};

/// Classical fixed-step RK4 for d omega/dt = L omega on the box truncation.
/// Rejects dt with dt * sqrt(||L||_1 ||L||_inf) > 0.5 and reports the largest
/// admissible dt in the exception message.
Trajectory evolve(const ProblemInstance& inst, int K, const StateVector& omega0, double t_final,
                  double dt, int snapshot_stride = 0);

/// Largest dt accepted by the evolve stability guard for this instance.
double max_stable_dt(const ProblemInstance& inst, int K);

/// Least-squares slope of log ||omega(t)|| over the trailing fit_window
/// fraction of the trajectory (at least 10 samples required).
double growth_rate(const Trajectory& traj, double fit_window = 0.5);

/// Consistency of evolution growth rates with the spectral abscissa of the
/// converged off-axis spectrum: the computable face of the spectral mapping
/// theorem.
struct SpectralMappingReport {
  double reference = 0.0;  // max(0, max Re of converged off-axis eigenvalues)
  double tolerance = 0.0;  // max(0.05 * reference, 0.01)
  std::vector<double> rates;
  bool spectrum_converged = true;
  bool ok = false;
};

/// Runs `trials` seeded random initial states. dt = 0 selects the largest
/// stable step automatically. Passing a precomputed report skips the spectral
/// run.
SpectralMappingReport spectral_mapping_check(const ProblemInstance& inst, int K, int trials,
                                             double t_final = 40.0, double dt = 0.0,
                                             std::uint64_t seed = 7,
                                             const SpectrumReport* precomputed = nullptr);

}  // namespace eulerspec

#endif
