#include "eulerspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "eulerspec/eig.hpp"
#include "eulerspec/matching.hpp"
#include "eulerspec/operators.hpp"
#include "eulerspec/thread_pool.hpp"

namespace eulerspec {

namespace {

bool complex_less(const Complex& u, const Complex& v) {
  if (u.real() != v.real()) return u.real() < v.real();
  return u.imag() < v.imag();
}

void sort_complex(std::vector<Complex>& v) { std::sort(v.begin(), v.end(), complex_less); }

std::vector<Complex> filter_above(const std::vector<Complex>& v, double abs_threshold,
                                  double (*measure)(const Complex&)) {
  std::vector<Complex> out;
  for (const Complex& z : v)
    if (measure(z) > abs_threshold) out.push_back(z);
  return out;
}

double abs_re(const Complex& z) { return std::abs(z.real()); }
double abs_all(const Complex& z) { return std::abs(z); }

Complex beta_of(const ProblemInstance& inst, const SliceDescriptor& slice) {
  return -(static_cast<double>(det2(slice.qhat, inst.p)) /
           (2.0 * static_cast<double>(norm_sq(inst.p)))) *
         inst.gamma;
}

}  // namespace

double classify_threshold(const NumericalControls& controls, Complex beta) {
  return std::max(controls.classify_tol, controls.classify_tol * std::abs(beta));
}

std::vector<Complex> slice_spectrum(const ProblemInstance& inst, const SliceDescriptor& slice,
                                    int N) {
  if (N < 8) throw std::invalid_argument("slice_spectrum: N must be at least 8");
  if (is_collinear(slice.qhat, inst.p)) return {Complex(0.0, 0.0)};

  const IndexWindow window{-N, N};
  const SliceCoefficients coeffs = slice_coefficients(inst, slice, window);
  const double babs = std::abs(coeffs.beta);
  if (babs == 0.0)  // Gamma = 0: the slice operator vanishes identically
    return std::vector<Complex>(static_cast<std::size_t>(window.size()), Complex(0.0, 0.0));

  std::vector<Complex> from_b = eig_values(build_Bq(coeffs, window).to_dense());
  for (Complex& z : from_b) z *= Complex(0.0, -babs);  // lambda = -i |beta| z
  std::vector<Complex> from_l = eig_values(build_Lq(coeffs, window).to_dense());

  // The two builds are exactly similar in exact arithmetic; confirm the
  // eigensolver agrees off the zero cluster (defective zeros split more).
  const double zero_cut = 1e-5 * babs;
  const std::vector<Complex> big_b = filter_above(from_b, zero_cut, abs_all);
  const std::vector<Complex> big_l = filter_above(from_l, zero_cut, abs_all);
  if (big_b.size() != big_l.size())
    throw std::logic_error("slice_spectrum: B and L paths disagree on the zero cluster size");
  const MatchResult m = match_multisets(big_b, big_l, 1e-8 * babs);
  if (!m.ok) {
    std::ostringstream msg;
    msg << "slice_spectrum: B and L paths disagree off zero (max dist " << m.max_dist
        << ", allowance " << 1e-8 * babs << ")";
    throw std::logic_error(msg.str());
  }

  sort_complex(from_b);
  return from_b;
}

int SpectrumReport::nonimaginary_count() const {
  int n = 0;
  for (const auto& e : nonimaginary) n += e.multiplicity;
  return n;
}

double SpectrumReport::max_real_part() const {
  double m = 0.0;
  for (const auto& e : nonimaginary) m = std::max(m, e.lambda.real());
  return m;
}

bool check_symmetry(const std::vector<Complex>& eigs, double tol) {
  std::vector<Complex> negated(eigs.size()), conjugated(eigs.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    negated[i] = -eigs[i];
    conjugated[i] = std::conj(eigs[i]);
  }
  return match_multisets(eigs, negated, tol).ok && match_multisets(eigs, conjugated, tol).ok;
}

SpectrumReport nonimaginary_spectrum(const ProblemInstance& inst) {
  SpectrumReport report;
  report.instance = inst;
  report.kappa = kappa(inst.p);

  const std::vector<SliceDescriptor> slices = contributing_slices(inst.p);
  report.per_slice.resize(slices.size());

  const NumericalControls& ctl = inst.controls;
  parallel_for(slices.size(), [&](std::size_t i) {
    SliceSpectrumEntry entry;
    entry.slice = slices[i];
    entry.beta = beta_of(inst, slices[i]);
    const double threshold = classify_threshold(ctl, entry.beta);

    int N = ctl.N0;
    std::vector<Complex> spectrum = slice_spectrum(inst, slices[i], N);
    std::vector<Complex> off_prev = filter_above(spectrum, threshold, abs_re);
    while (N * 2 <= ctl.N_max) {
      N *= 2;
      spectrum = slice_spectrum(inst, slices[i], N);
      std::vector<Complex> off = filter_above(spectrum, threshold, abs_re);
      const MatchResult m = match_multisets(off_prev, off, ctl.eig_tol);
      entry.residual = m.max_dist;
      off_prev = std::move(off);
      if (m.ok) {
        entry.converged = true;
        break;
      }
    }
    entry.final_N = N;
    entry.eigenvalues = std::move(spectrum);
    entry.off_axis = std::move(off_prev);
    report.per_slice[i] = std::move(entry);
  });

  // Aggregate off-axis values across slices and cluster for multiplicities.
  struct Tagged {
    Complex lambda;
    LatticeVector qhat;
  };
  std::vector<Tagged> pool;
  std::vector<Complex> raw;
  bool all_converged = true;
  for (const auto& entry : report.per_slice) {
    all_converged = all_converged && entry.converged;
    for (const Complex& z : entry.off_axis) {
      pool.push_back({z, entry.slice.qhat});
      raw.push_back(z);
    }
  }
  report.all_converged = all_converged;

  std::sort(pool.begin(), pool.end(), [](const Tagged& u, const Tagged& v) {
    if (u.lambda.real() != v.lambda.real()) return u.lambda.real() < v.lambda.real();
    if (u.lambda.imag() != v.lambda.imag()) return u.lambda.imag() < v.lambda.imag();
    return u.qhat < v.qhat;
  });
  const double cluster_radius = 10.0 * ctl.eig_tol;
  std::vector<bool> taken(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (taken[i]) continue;
    NonimaginaryEigenvalue cluster;
    cluster.qhat = pool[i].qhat;
    Complex sum(0.0, 0.0);
    int count = 0;
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (taken[j] || std::abs(pool[j].lambda - pool[i].lambda) > cluster_radius) continue;
      taken[j] = true;
      sum += pool[j].lambda;
      ++count;
    }
    cluster.lambda = sum / static_cast<double>(count);
    cluster.multiplicity = count;
    report.nonimaginary.push_back(cluster);
  }

  report.bound_ok = report.nonimaginary_count() <= 2 * report.kappa;
  report.symmetry_ok = check_symmetry(raw, 1e-6);
  return report;
}

EssentialInterval essential_interval(const ProblemInstance& inst, const SliceDescriptor& slice) {
  if (is_collinear(slice.qhat, inst.p))
    throw std::invalid_argument("essential_interval: collinear slice");
  return EssentialInterval{std::abs(beta_of(inst, slice))};
}

double essential_coverage(const ProblemInstance& inst, const SliceDescriptor& slice, int N) {
  if (is_collinear(slice.qhat, inst.p))
    throw std::invalid_argument("essential_coverage: collinear slice");
  if (norm_sq(slice.qhat) <= norm_sq(inst.p))
    throw std::invalid_argument("essential_coverage: requires ||qhat|| > ||p|| (Hermitian build)");
  const IndexWindow window{-N, N};
  const SliceCoefficients coeffs = slice_coefficients(inst, slice, window);
  const std::vector<double> z = eig_hermitian_values(build_Bq(coeffs, window).to_dense());
  double gap = std::max(z.front() - (-2.0), 2.0 - z.back());
  for (std::size_t i = 0; i + 1 < z.size(); ++i) gap = std::max(gap, z[i + 1] - z[i]);
  return gap;
}

std::vector<double> resolvent_norm_samples(const ProblemInstance& inst, int K, double a,
                                           const std::vector<double>& taus) {
  if (a == 0.0)
    throw std::invalid_argument("resolvent_norm_samples: a must be nonzero (axis may be spectrum)");
  const BoxOperator2D box = build_L2D(inst, K);
  const Eigen::MatrixXcd dense = box.to_dense();
  std::vector<double> out(taus.size(), 0.0);
  parallel_for(taus.size(), [&](std::size_t i) {
    Eigen::MatrixXcd shifted = -dense;
    shifted.diagonal().array() += Complex(a, taus[i]);
    const double sigma = smallest_singular_value(shifted);
    out[i] = sigma > 0.0 ? 1.0 / sigma : std::numeric_limits<double>::infinity();
  });
  return out;
}

DecompositionReport decomposition_crosscheck(const ProblemInstance& inst, int K) {
  DecompositionReport report;
  const BoxOperator2D box = build_L2D(inst, K);
  report.dim = box.dim();

  std::vector<Complex> full = eig_values(box.to_dense());

  // Union side: group box modes into slices, solve each windowed block.
  struct SliceWindow {
    int n_lo, n_hi, count;
  };
  std::map<LatticeVector, SliceWindow> windows;
  int collinear_modes = 0;
  for (const LatticeVector& k : box.modes) {
    if (is_collinear(k, inst.p)) {
      ++collinear_modes;
      continue;
    }
    const LatticeVector qhat = slice_representative(k, inst.p);
    const std::int64_t n = dot(k - qhat, inst.p) / norm_sq(inst.p);
    const auto it = windows.find(qhat);
    if (it == windows.end()) {
      windows.emplace(qhat, SliceWindow{static_cast<int>(n), static_cast<int>(n), 1});
    } else {
      it->second.n_lo = std::min(it->second.n_lo, static_cast<int>(n));
      it->second.n_hi = std::max(it->second.n_hi, static_cast<int>(n));
      ++it->second.count;
    }
  }
  report.collinear_modes = collinear_modes;
  report.n_slices = static_cast<int>(windows.size());

  std::vector<Complex> united(static_cast<std::size_t>(collinear_modes), Complex(0.0, 0.0));
  for (const auto& [qhat, w] : windows) {
    const IndexWindow window{w.n_lo, w.n_hi};
    if (window.size() != w.count)
      throw std::logic_error("decomposition_crosscheck: box-slice window not contiguous");
    const SliceDescriptor slice{qhat, inst.p, std::nullopt};
    const SliceCoefficients coeffs = slice_coefficients(inst, slice, window);
    const std::vector<Complex> eigs = eig_values(build_Lq(coeffs, window).to_dense());
    united.insert(united.end(), eigs.begin(), eigs.end());
  }

  report.tol = 1e-9;
  report.zero_cutoff = 1e-6 * std::max(1.0, box.norm_upper_bound());
  const std::vector<Complex> full_nz = filter_above(full, report.zero_cutoff, abs_all);
  const std::vector<Complex> united_nz = filter_above(united, report.zero_cutoff, abs_all);
  report.zero_count_full = static_cast<int>(full.size() - full_nz.size());
  report.zero_count_union = static_cast<int>(united.size() - united_nz.size());

  bool ok = united.size() == full.size() && report.zero_count_full == report.zero_count_union;
  MatchResult m;
  if (ok) {
    m = match_multisets(full_nz, united_nz, report.tol);
    report.off_zero_max_dist = m.max_dist;
    ok = m.ok;
  }
  report.match = ok;

  if (!report.match) {
    std::ostringstream d;
    d << "dimension " << full.size() << " vs union " << united.size() << "; zero cluster "
      << report.zero_count_full << " vs " << report.zero_count_union << " (cutoff "
      << report.zero_cutoff << "); off-zero max dist " << report.off_zero_max_dist;
    report.diffs.push_back(d.str());
    for (const auto& [qhat, w] : windows) {
      std::ostringstream s;
      s << "slice (" << qhat.x << "," << qhat.y << ") window [" << w.n_lo << "," << w.n_hi
        << "] modes " << w.count;
      report.diffs.push_back(s.str());
    }
  }
  return report;
}

}  // namespace eulerspec
