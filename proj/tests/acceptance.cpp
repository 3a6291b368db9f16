// Acceptance battery: one pass/fail line per criterion, exit code equals the
// number of failures. Tolerances are pinned here on purpose; loosening them
// requires revisiting the reference runs that produced the frozen numbers.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eulerspec/eig.hpp"
#include "eulerspec/evolution.hpp"
#include "eulerspec/matching.hpp"
#include "eulerspec/operators.hpp"
#include "eulerspec/spectra.hpp"

using namespace eulerspec;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

const std::vector<LatticeVector> kBatteryP{{1, 1}, {0, 2}, {2, 0}, {2, 1}, {1, 2}, {2, 2}};
const std::vector<Complex> kBatteryGamma{{1, 0}, {0, 1}, {1, 1}, {2, 0}};

struct RandomCase {
  ProblemInstance inst;
  SliceDescriptor slice;
  int N = 0;
  bool in_disk = false;
};

// Fixed pool of 50 slice truncations shared by the algebra and multiset
// criteria: random direction, representative, circulation, and window size.
std::vector<RandomCase> make_random_cases() {
  std::mt19937_64 rng(0xace5);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<RandomCase> cases;
  while (cases.size() < 50) {
    const LatticeVector p{coord(rng), coord(rng)};
    if (p.is_zero()) continue;
    RandomCase c;
    c.inst = ProblemInstance{p, Complex(g(rng), g(rng)), {}};
    if (std::abs(c.inst.gamma) < 0.05) continue;

    const auto disk = contributing_slices(p);
    if (!disk.empty() && rng() % 2 == 0) {
      c.slice = disk[rng() % disk.size()];
      c.in_disk = true;
    } else {
      const LatticeVector q{coord(rng), coord(rng)};
      if (is_collinear(q, p)) continue;
      const LatticeVector rep = slice_representative(q, p);
      if (norm_sq(rep) < norm_sq(p)) continue;  // handled by the disk branch
      c.slice = SliceDescriptor{rep, p, std::nullopt};
    }
    // window sizes biased small, with a few large truncations up to N = 256
    const std::size_t k = cases.size();
    c.N = k == 49 ? 256 : (k >= 46 ? 128 : 8 + static_cast<int>(rng() % 49));
    cases.push_back(c);
  }
  return cases;
}

double rel_entry_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  double scale = 0.0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      scale = std::max({scale, std::abs(a(i, j)), std::abs(b(i, j))});
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst / scale;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

// ---- criterion 1: brute-force disk-count oracle for kappa ----
Outcome criterion_kappa() {
  Outcome out;
  int directions = 0;
  for (std::int64_t px = -10; px <= 10; ++px)
    for (std::int64_t py = -10; py <= 10; ++py) {
      const LatticeVector p{px, py};
      if (p.is_zero() || norm_sq(p) > 100) continue;
      ++directions;
      int brute = 0;
      for (std::int64_t x = -10; x <= 10; ++x)
        for (std::int64_t y = -10; y <= 10; ++y) {
          const LatticeVector v{x, y};
          if (norm_sq(v) < norm_sq(p) && det2(v, p) != 0) ++brute;
        }
      const int k = kappa(p);
      if (k != brute) out.fail("kappa mismatch at (" + std::to_string(px) + "," +
                               std::to_string(py) + ")");
      if (k % 2 != 0) out.fail("odd kappa at (" + std::to_string(px) + "," +
                               std::to_string(py) + ")");
    }
  const std::vector<std::pair<LatticeVector, int>> table{
      {{0, 1}, 0}, {{1, 1}, 4}, {{0, 2}, 6}, {{2, 1}, 12}};
  for (const auto& [p, expected] : table)
    if (kappa(p) != expected) out.fail("table value off at kappa(" + std::to_string(p.x) + "," +
                                       std::to_string(p.y) + ")");
  out.detail = std::to_string(directions) + " directions, all even";
  return out;
}

// ---- criterion 2: exact algebraic identities between the builds ----
Outcome criterion_algebra(const std::vector<RandomCase>& cases) {
  Outcome out;
  double worst = 0.0;
  for (const auto& c : cases) {
    const IndexWindow w{-c.N, c.N};
    const auto coeffs = slice_coefficients(c.inst, c.slice, w);
    const auto m0 = build_M0(coeffs.alpha, w).to_dense();
    const auto mq = build_Mq(coeffs, w).to_dense();
    const auto bq = build_Bq(coeffs, w).to_dense();
    const auto lq = build_Lq(coeffs, w).to_dense();

    Eigen::VectorXcd d(w.size());
    for (int n = w.lo; n <= w.hi; ++n) d(n - w.lo) = coeffs.delta_at(n);

    const double e1 = rel_entry_diff(lq, Complex(0, -std::abs(coeffs.beta)) * mq);
    const double e2 = rel_entry_diff(bq, d.asDiagonal() * m0 * d.asDiagonal());

    Eigen::VectorXcd j = Eigen::VectorXcd::Ones(w.size());
    if (c.in_disk) {
      const auto sig = build_signature(c.slice, w);
      for (int n = w.lo; n <= w.hi; ++n) j(n - w.lo) = sig.sign_at(n);
    }
    const Eigen::MatrixXcd jbj = j.asDiagonal() * bq * j.asDiagonal();
    const double e3 = rel_entry_diff(jbj, bq.adjoint());

    worst = std::max({worst, e1, e2, e3});
    if (e1 > 1e-14) out.fail("L vs -i|b|M off by " + fmt(e1));
    if (e2 > 1e-14) out.fail("B vs dMd off by " + fmt(e2));
    if (e3 > 1e-14) out.fail("JBJ vs B* off by " + fmt(e3));
  }
  out.detail = "50 cases, worst entry error " + fmt(worst);
  return out;
}

// ---- criterion 3: nonzero truncated spectra of M_q and B_q coincide ----
Outcome criterion_multisets(const std::vector<RandomCase>& cases) {
  Outcome out;
  double worst = 0.0;
  const double zero_cutoff = 1e-9;
  for (const auto& c : cases) {
    const IndexWindow w{-c.N, c.N};
    const auto coeffs = slice_coefficients(c.inst, c.slice, w);
    auto mv = eig_values(build_Mq(coeffs, w).to_dense());
    auto bv = eig_values(build_Bq(coeffs, w).to_dense());
    std::vector<Complex> mz, bz;
    for (const auto& v : mv)
      if (std::abs(v) > zero_cutoff) mz.push_back(v);
    for (const auto& v : bv)
      if (std::abs(v) > zero_cutoff) bz.push_back(v);
    if (mz.size() != bz.size()) {
      out.fail("nonzero counts differ (" + std::to_string(mz.size()) + " vs " +
               std::to_string(bz.size()) + ")");
      continue;
    }
    const auto r = match_multisets(mz, bz, 1e-8);
    worst = std::max(worst, r.max_dist);
    if (!r.ok) out.fail("multiset distance " + fmt(r.max_dist));
  }
  out.detail = "worst multiset distance " + fmt(worst);
  return out;
}

// ---- criterion 4: out-of-disk slices keep a purely imaginary spectrum ----
Outcome criterion_imaginary_slices() {
  Outcome out;
  const int N = 256;
  int used = 0;
  double worst = 0.0;
  for (const auto& p : kBatteryP) {
    const ProblemInstance inst{p, Complex(1.0, 0.5), {}};
    int from_this_p = 0;
    for (const auto& slice : enumerate_representatives(p, 4.0)) {
      if (norm_sq(slice.qhat) < norm_sq(p)) continue;
      if (used == 20 || from_this_p == 4) break;
      ++from_this_p;
      const auto coeffs = slice_coefficients(inst, slice, {-2, 2});
      const auto vals = slice_spectrum(inst, slice, N);
      double max_re = 0.0;
      for (const auto& v : vals) max_re = std::max(max_re, std::abs(v.real()));
      const double gate = 1e-10 * std::abs(coeffs.beta);
      worst = std::max(worst, max_re / std::max(gate, 1e-300));
      if (max_re > gate)
        out.fail("slice (" + std::to_string(slice.qhat.x) + "," + std::to_string(slice.qhat.y) +
                 ") leaks Re " + fmt(max_re));
      ++used;
    }
  }
  if (used < 20) out.fail("only sampled " + std::to_string(used) + " slices");
  out.detail = std::to_string(used) + " slices at N=256, worst |Re|/gate " + fmt(worst);
  return out;
}

// ---- criteria 5 and 6 share the full battery survey ----
struct BatterySurvey {
  Outcome bound;
  Outcome symmetry;
};

BatterySurvey survey_battery() {
  BatterySurvey s;
  int members = 0;
  int saturated = 0;
  for (const auto& p : kBatteryP)
    for (const auto& gamma : kBatteryGamma) {
      const ProblemInstance inst{p, gamma, {}};
      const auto report = nonimaginary_spectrum(inst);
      ++members;
      const std::string tag = "p=(" + std::to_string(p.x) + "," + std::to_string(p.y) +
                              ") G=(" + fmt(gamma.real()) + "," + fmt(gamma.imag()) + ")";
      if (!report.all_converged) {
        s.bound.fail(tag + " did not converge");
        continue;
      }
      if (!report.bound_ok || report.nonimaginary_count() > 2 * report.kappa)
        s.bound.fail(tag + " count " + std::to_string(report.nonimaginary_count()) +
                     " exceeds " + std::to_string(2 * report.kappa));
      if (report.nonimaginary_count() == 2 * report.kappa) ++saturated;
      if (!report.symmetry_ok) s.symmetry.fail(tag + " breaks four-fold symmetry");
    }
  s.bound.detail = std::to_string(members) + " members, bound saturated in " +
                   std::to_string(saturated);
  s.symmetry.detail = std::to_string(members) + " members within 1e-6";
  return s;
}

// ---- criterion 7: truncated essential spectrum fills its interval ----
Outcome criterion_essential() {
  Outcome out;
  const ProblemInstance inst{{0, 2}, Complex(1, 0), {}};
  const std::vector<LatticeVector> qhats{{3, 0}, {1, 2}};
  for (const auto& qhat : qhats) {
    const SliceDescriptor slice{qhat, inst.p, std::nullopt};
    const double g100 = essential_coverage(inst, slice, 100);
    const double g200 = essential_coverage(inst, slice, 200);
    const std::string tag = "(" + std::to_string(qhat.x) + "," + std::to_string(qhat.y) + ")";
    if (g200 > 0.65 * g100)
      out.fail(tag + " gap did not halve: " + fmt(g100) + " -> " + fmt(g200));
    if (g100 > 8.0 / 100 || g200 > 8.0 / 200) out.fail(tag + " gap exceeds 8/N");

    // endpoint convergence of the Hermitian truncation toward +-2
    const IndexWindow w{-200, 200};
    const auto coeffs = slice_coefficients(inst, slice, w);
    const auto vals = eig_hermitian_values(build_Bq(coeffs, w).to_dense());
    const double lo = vals.front(), hi = vals.back();
    if (std::abs(hi - 2.0) > 2e-3 || std::abs(lo + 2.0) > 2e-3)
      out.fail(tag + " endpoints " + fmt(lo) + ", " + fmt(hi));
    if (out.ok && out.detail.empty())
      out.detail = "gap " + fmt(g100) + " -> " + fmt(g200) + ", endpoints within " +
                   fmt(std::max(std::abs(hi - 2.0), std::abs(lo + 2.0)));
  }
  return out;
}

// ---- criterion 8: box spectrum equals the union of windowed slices ----
Outcome criterion_decomposition() {
  Outcome out;
  double worst = 0.0;
  for (const LatticeVector p : {LatticeVector{1, 1}, LatticeVector{0, 2}}) {
    const ProblemInstance inst{p, Complex(1, 1), {}};
    const auto rep = decomposition_crosscheck(inst, 8);
    worst = std::max(worst, rep.off_zero_max_dist);
    const std::string tag = "p=(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    if (!rep.match) out.fail(tag + " multisets differ");
    if (rep.zero_count_full != rep.zero_count_union) out.fail(tag + " kernel sizes differ");
    if (rep.off_zero_max_dist > 1e-9)
      out.fail(tag + " off-zero distance " + fmt(rep.off_zero_max_dist));
  }
  out.detail = "K=8, worst off-zero distance " + fmt(worst);
  return out;
}

// ---- criterion 9: the unstable witness and its growth rate ----
Outcome criterion_instability() {
  Outcome out;
  const ProblemInstance inst{{0, 2}, Complex(2, 0), {}};
  const double golden = 0.522498479150744;  // frozen from the reference run

  const SliceDescriptor slice{{1, 0}, {0, 2}, IndexWindow{0, 0}};
  const auto coeffs = slice_coefficients(inst, slice, {-2, 2});
  const double threshold = classify_threshold(inst.controls, coeffs.beta);
  std::vector<Complex> off200, off400;
  for (const auto& v : slice_spectrum(inst, slice, 200))
    if (std::abs(v.real()) > threshold) off200.push_back(v);
  for (const auto& v : slice_spectrum(inst, slice, 400))
    if (std::abs(v.real()) > threshold) off400.push_back(v);
  if (off200.size() != 2 || off400.size() != 2)
    out.fail("expected the real pair, got " + std::to_string(off200.size()) + " / " +
             std::to_string(off400.size()));
  const auto moved = match_multisets(off200, off400, 1e-6);
  if (!moved.ok) out.fail("N=200 vs N=400 moved " + fmt(moved.max_dist));
  double hit = 0.0;
  for (const auto& v : off400) hit = std::max(hit, v.real());
  if (std::abs(hit - golden) > 1e-6) out.fail("pair at " + fmt(hit) + " vs frozen " + fmt(golden));

  const auto report = nonimaginary_spectrum(inst);
  if (!report.all_converged || !report.bound_ok) out.fail("instance survey not clean");
  if (std::abs(report.max_real_part() - golden) > 1e-6)
    out.fail("abscissa " + fmt(report.max_real_part()));

  const auto mapping = spectral_mapping_check(inst, 16, 3, 40.0, 0.0, 7, &report);
  for (double r : mapping.rates)
    if (std::abs(r - mapping.reference) > 0.05 * mapping.reference)
      out.fail("growth rate " + fmt(r) + " off the 5% gate");
  if (!mapping.ok) out.fail("mapping check flagged");
  if (out.ok)
    out.detail = "pair +-" + fmt(hit) + ", movement " + fmt(moved.max_dist) + ", rates within " +
                 fmt(mapping.reference == 0.0
                         ? 0.0
                         : *std::max_element(mapping.rates.begin(), mapping.rates.end()) /
                                   mapping.reference -
                               1.0);
  return out;
}

// ---- criterion 10: the stable witness stays flat ----
Outcome criterion_stability() {
  Outcome out;
  const ProblemInstance inst{{0, 1}, Complex(1, 0), {}};
  const auto report = nonimaginary_spectrum(inst);
  if (report.kappa != 0) out.fail("kappa not zero");
  if (!report.nonimaginary.empty())
    out.fail(std::to_string(report.nonimaginary.size()) + " spurious clusters");
  const auto mapping = spectral_mapping_check(inst, 16, 2, 100.0, 0.0, 7, &report);
  double worst = 0.0;
  for (double r : mapping.rates) {
    worst = std::max(worst, r);
    if (r > 0.01) out.fail("rate " + fmt(r) + " above 0.01");
  }
  if (!mapping.ok) out.fail("mapping check flagged");
  out.detail = "empty spectrum, worst rate " + fmt(worst) + " over t in [0,100]";
  return out;
}

// ---- criterion 11: resolvent norms stay bounded along Re = 0.5 ----
Outcome criterion_resolvent() {
  Outcome out;
  const ProblemInstance inst{{0, 2}, Complex(1, 0), {}};
  const int K = 16;
  std::vector<double> taus;
  for (int t = 0; t <= 100; t += 5) taus.push_back(t);
  const auto samples = resolvent_norm_samples(inst, K, 0.5, taus);
  double head = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i)
    (taus[i] < 20.0 ? head : tail) = std::max(taus[i] < 20.0 ? head : tail, samples[i]);
  if (tail > head) out.fail("tail " + fmt(tail) + " above head " + fmt(head));

  const auto box = build_L2D(inst, K);
  const double ub = box.norm_upper_bound();
  const std::vector<double> far{500.0, 1000.0};
  const auto far_samples = resolvent_norm_samples(inst, K, 0.5, far);
  for (std::size_t i = 0; i < far.size(); ++i) {
    const double bound = 1.0 / (std::abs(Complex(0.5, far[i])) - ub);
    if (far_samples[i] > bound * (1 + 1e-9))
      out.fail("far sample " + fmt(far_samples[i]) + " above " + fmt(bound));
  }
  out.detail = "head " + fmt(head) + ", tail " + fmt(tail) + ", far field obeys 1/(|z|-|L|)";
  return out;
}

// ---- criterion 12: coupling strength decays like 1/||qhat|| ----
Outcome criterion_decay() {
  Outcome out;
  int reps = 0;
  double worst_ratio = 0.0;
  for (const auto& p : kBatteryP)
    for (const auto& gamma : kBatteryGamma) {
      const ProblemInstance inst{p, gamma, {}};
      for (const auto& slice : enumerate_representatives(p, 20.0)) {
        const auto c = slice_coefficients(inst, slice, {-30, 30});
        double sup = 0.0;
        for (double g : c.gamma) sup = std::max(sup, std::abs(g));
        const double bound = std::abs(gamma) * norm(p) / 2.0 / norm(slice.qhat);
        const double ratio = std::abs(c.beta) * sup / bound;
        worst_ratio = std::max(worst_ratio, ratio);
        if (ratio > 1 + 1e-12)
          out.fail("bound violated at qhat=(" + std::to_string(slice.qhat.x) + "," +
                   std::to_string(slice.qhat.y) + ")");
        ++reps;
      }
    }
  out.detail = std::to_string(reps) + " cases, worst ratio " + fmt(worst_ratio);
  return out;
}

int report_line(int id, const char* name, const Outcome& out, double seconds, double budget) {
  bool ok = out.ok;
  std::string detail = out.detail;
  if (budget > 0 && seconds > budget) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over the ") + fmt(budget) +
              " s budget";
  }
  std::printf("[%s] %2d %-28s %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(),
              seconds);
  std::fflush(stdout);
  return ok ? 0 : 1;
}

template <typename Fn>
int timed(int id, const char* name, double budget, Fn&& fn) {
  const auto start = Clock::now();
  const Outcome out = fn();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report_line(id, name, out, seconds, budget);
}

}  // namespace

int main() {
  int failures = 0;
  const auto cases = make_random_cases();

  failures += timed(1, "kappa disk oracle", 1.0, criterion_kappa);
  failures += timed(2, "exact operator algebra", 5.0, [&] { return criterion_algebra(cases); });
  failures += timed(3, "M/B nonzero multisets", 120.0, [&] { return criterion_multisets(cases); });
  failures += timed(4, "imaginary out-of-disk slices", 0.0, criterion_imaginary_slices);

  const auto battery_start = Clock::now();
  const auto battery = survey_battery();
  const double battery_seconds =
      std::chrono::duration<double>(Clock::now() - battery_start).count();
  failures += report_line(5, "2*kappa count bound", battery.bound, battery_seconds, 600.0);
  failures += report_line(6, "four-fold symmetry", battery.symmetry, battery_seconds, 0.0);

  failures += timed(7, "essential interval coverage", 0.0, criterion_essential);
  failures += timed(8, "slice decomposition of the box", 60.0, criterion_decomposition);
  failures += timed(9, "instability witness", 300.0, criterion_instability);
  failures += timed(10, "stability witness", 0.0, criterion_stability);
  failures += timed(11, "resolvent boundedness", 0.0, criterion_resolvent);
  failures += timed(12, "coupling decay bound", 0.0, criterion_decay);

  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures;
}
