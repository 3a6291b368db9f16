#ifndef EULERSPEC_SERIALIZE_HPP
#define EULERSPEC_SERIALIZE_HPP

#include <optional>
#include <string>

#include "eulerspec/evolution.hpp"
#include "eulerspec/operators.hpp"
#include "eulerspec/spectra.hpp"

namespace eulerspec {

/// Listing of the contributing slices of an instance, with per-slice beta.
struct SlicesReport {
  ProblemInstance instance;
  std::vector<SliceDescriptor> slices;
  std::vector<Complex> betas;  // aligned with slices
  int kappa = 0;
};

SlicesReport make_slices_report(const ProblemInstance& inst);

/// Bundle written by the evolve command: the mapping check plus the first
/// trial's trajectory.
struct EvolveReport {
  ProblemInstance instance;
  int K = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double t_final = 0.0;
  double dt = 0.0;
  SpectralMappingReport mapping;
  Trajectory trajectory;
};

/// Bundle written by the resolvent command. tail_ok states that samples with
/// tau >= split_tau never exceed the maximum over tau < split_tau.
struct ResolventReport {
  ProblemInstance instance;
  int K = 0;
  double a = 0.0;
  double split_tau = 20.0;
  std::vector<double> taus;
  std::vector<double> samples;
  bool tail_ok = false;
};

// All JSON documents carry "schema": 1 and have a fixed field order, so a
// fixed input produces byte-identical output.
std::string to_json(const SlicesReport& r, bool pretty = false);
std::string to_json(const SpectrumReport& r, bool pretty = false);
std::string to_json(const EvolveReport& r, bool pretty = false);
std::string to_json(const ResolventReport& r, bool pretty = false);
std::string to_json(const TridiagonalOperator& t, bool pretty = false);

std::string to_csv(const SlicesReport& r);
std::string to_csv(const SpectrumReport& r);  // one eigenvalue per row
std::string to_csv(const EvolveReport& r);    // t, norm of the first trial
std::string to_csv(const ResolventReport& r);

/// Merge previously written JSON reports (empty string = missing) into one
/// document; nullopt when every input is missing.
std::optional<std::string> combine_reports_json(const std::string& spectrum_json,
                                                const std::string& evolve_json,
                                                const std::string& resolvent_json, bool pretty);
std::optional<std::string> combine_reports_markdown(const std::string& spectrum_json,
                                                    const std::string& evolve_json,
                                                    const std::string& resolvent_json);

}  // namespace eulerspec

#endif
