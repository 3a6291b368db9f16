#include "eulerspec/evolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eulerspec/thread_pool.hpp"

namespace eulerspec {

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& v : values) s += std::norm(v);
  return std::sqrt(s);
}

StateVector random_state(int K, std::uint64_t seed) {
  StateVector state;
  state.K = K;
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53; };
  const auto gaussian = [&] {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    return Complex(r * std::cos(t), r * std::sin(t));
  };

  std::vector<LatticeVector> modes;
  std::map<LatticeVector, int> index;
  for (std::int64_t x = -K; x <= K; ++x)
    for (std::int64_t y = -K; y <= K; ++y) {
      const LatticeVector k{x, y};
      if (k.is_zero()) continue;
      index.emplace(k, static_cast<int>(modes.size()));
      modes.push_back(k);
    }
  state.values.resize(modes.size());
  for (auto& v : state.values) v = gaussian();
  // Enforce omega_{-k} = conj(omega_k); each pair is averaged once.
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const LatticeVector k = modes[i];
    if (!(k < -k)) continue;
    const std::size_t j = static_cast<std::size_t>(index.at(-k));
    const Complex sym = 0.5 * (state.values[i] + std::conj(state.values[j]));
    state.values[i] = sym;
    state.values[j] = std::conj(sym);
  }
  return state;
}

double max_stable_dt(const ProblemInstance& inst, int K) {
  const double bound = build_L2D(inst, K).norm_upper_bound();
  return bound > 0.0 ? 0.5 / bound : std::numeric_limits<double>::infinity();
}

Trajectory evolve(const ProblemInstance& inst, int K, const StateVector& omega0, double t_final,
                  double dt, int snapshot_stride) {
  if (dt <= 0.0) throw std::invalid_argument("evolve: dt must be positive");
  if (t_final <= 0.0) throw std::invalid_argument("evolve: t_final must be positive");
  const BoxOperator2D box = build_L2D(inst, K);
  if (omega0.K != K || static_cast<int>(omega0.values.size()) != box.dim())
    throw std::invalid_argument("evolve: initial state does not match the box");
  const double bound = box.norm_upper_bound();
  if (dt * bound > 0.5 * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "evolve: dt " << dt << " violates the stability guard; require dt <= "
        << 0.5 / bound;
    throw std::invalid_argument(msg.str());
  }

  const auto n = static_cast<std::size_t>(box.dim());
  std::vector<Complex> x = omega0.values, k1(n), k2(n), k3(n), k4(n), tmp(n);
  const auto record_norm = [](const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
  };

  Trajectory traj;
  const long steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.norms.reserve(static_cast<std::size_t>(steps) + 1);
  traj.times.push_back(0.0);
  traj.norms.push_back(record_norm(x));
  for (long s = 1; s <= steps; ++s) {
    box.apply(x.data(), k1.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    box.apply(tmp.data(), k2.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    box.apply(tmp.data(), k3.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    box.apply(tmp.data(), k4.data());
    for (std::size_t i = 0; i < n; ++i)
      x[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    traj.times.push_back(static_cast<double>(s) * dt);
    traj.norms.push_back(record_norm(x));
    if (snapshot_stride > 0 && s % snapshot_stride == 0 && s != steps) {
      traj.snapshot_times.push_back(traj.times.back());
      traj.snapshots.push_back(StateVector{K, x});
    }
  }
  traj.snapshot_times.push_back(traj.times.back());
  traj.snapshots.push_back(StateVector{K, std::move(x)});
  return traj;
}

double growth_rate(const Trajectory& traj, double fit_window) {
  if (fit_window <= 0.0 || fit_window > 1.0)
    throw std::invalid_argument("growth_rate: fit_window must lie in (0, 1]");
  const std::size_t n = traj.norms.size();
  const auto first = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * (1.0 - fit_window)));
  if (n - first < 10)
    throw std::invalid_argument("growth_rate: fit window holds fewer than 10 samples");

  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  const double m = static_cast<double>(n - first);
  for (std::size_t i = first; i < n; ++i) {
    if (traj.norms[i] <= 0.0)
      throw std::invalid_argument("growth_rate: zero state norm in the fit window");
    const double t = traj.times[i];
    const double y = std::log(traj.norms[i]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  return (m * sty - st * sy) / (m * stt - st * st);
}

SpectralMappingReport spectral_mapping_check(const ProblemInstance& inst, int K, int trials,
                                             double t_final, double dt, std::uint64_t seed,
                                             const SpectrumReport* precomputed) {
  if (trials < 1) throw std::invalid_argument("spectral_mapping_check: trials must be >= 1");
  SpectrumReport local;
  if (!precomputed) {
    local = nonimaginary_spectrum(inst);
    precomputed = &local;
  }

  SpectralMappingReport report;
  report.spectrum_converged = precomputed->all_converged;
  report.reference = std::max(0.0, precomputed->max_real_part());
  report.tolerance = std::max(0.05 * report.reference, 0.01);

  if (dt <= 0.0) {
    const double cap = max_stable_dt(inst, K);
    const double steps = std::ceil(t_final / cap);
    dt = t_final / steps;
  }

  report.rates.resize(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    const StateVector omega0 = random_state(K, seed + t);
    const Trajectory traj = evolve(inst, K, omega0, t_final, dt);
    report.rates[t] = growth_rate(traj);
  });

  bool ok = true;
  for (const double rate : report.rates) {
    if (report.reference > 0.0)
      ok = ok && std::abs(rate - report.reference) <= report.tolerance;
    else
      ok = ok && rate <= 0.01;
  }
  report.ok = ok;
  return report;
}

}  // namespace eulerspec
