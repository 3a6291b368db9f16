#include "eulerspec/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerspec {

Eigen::MatrixXcd TridiagonalOperator::to_dense() const {
  const int m = size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
  for (int j = 0; j < m; ++j) a(j, j) = diag[static_cast<std::size_t>(j)];
  for (int j = 0; j + 1 < m; ++j) {
    a(j + 1, j) = sub[static_cast<std::size_t>(j)];
    a(j, j + 1) = super[static_cast<std::size_t>(j)];
  }
  return a;
}

namespace {

TridiagonalOperator make_empty(TridiagonalKind kind, IndexWindow window) {
  TridiagonalOperator t;
  t.kind = kind;
  t.n_lo = window.lo;
  t.n_hi = window.hi;
  const auto m = static_cast<std::size_t>(window.size());
  t.diag.assign(m, Complex(0.0, 0.0));
  t.sub.assign(m > 0 ? m - 1 : 0, Complex(0.0, 0.0));
  t.super.assign(m > 0 ? m - 1 : 0, Complex(0.0, 0.0));
  return t;
}

void check_range(const SliceCoefficients& coeffs, IndexWindow window, const char* who) {
  if (!coeffs.range().contains(window))
    throw std::invalid_argument(std::string(who) + ": window exceeds coefficient range");
}

void stamp(TridiagonalOperator& t, const SliceCoefficients& coeffs) {
  t.p = coeffs.p;
  t.qhat = coeffs.qhat;
  t.circulation = coeffs.circulation;
  t.beta = coeffs.beta;
}

}  // namespace

TridiagonalOperator build_M0(Complex alpha, IndexWindow window) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
    throw std::invalid_argument("build_M0: alpha must be unimodular");
  TridiagonalOperator t = make_empty(TridiagonalKind::M0, window);
  for (auto& v : t.sub) v = alpha;
  for (auto& v : t.super) v = std::conj(alpha);
  return t;
}

TridiagonalOperator build_Bq(const SliceCoefficients& coeffs, IndexWindow window) {
  check_range(coeffs, window, "build_Bq");
  TridiagonalOperator t = make_empty(TridiagonalKind::Bq, window);
  stamp(t, coeffs);
  for (int n = window.lo; n < window.hi; ++n) {
    const Complex pair = coeffs.delta_at(n) * coeffs.delta_at(n + 1);
    t.sub[static_cast<std::size_t>(n - window.lo)] = coeffs.alpha * pair;
    t.super[static_cast<std::size_t>(n - window.lo)] = std::conj(coeffs.alpha) * pair;
  }
  return t;
}

TridiagonalOperator build_Mq(const SliceCoefficients& coeffs, IndexWindow window) {
  check_range(coeffs, window, "build_Mq");
  TridiagonalOperator t = make_empty(TridiagonalKind::Mq, window);
  stamp(t, coeffs);
  for (int n = window.lo; n < window.hi; ++n) {
    t.sub[static_cast<std::size_t>(n - window.lo)] = coeffs.alpha * (1.0 + coeffs.gamma_at(n));
    t.super[static_cast<std::size_t>(n - window.lo)] =
        std::conj(coeffs.alpha) * (1.0 + coeffs.gamma_at(n + 1));
  }
  return t;
}

TridiagonalOperator build_Lq(const SliceCoefficients& coeffs, IndexWindow window) {
  check_range(coeffs, window, "build_Lq");
  TridiagonalOperator t = make_empty(TridiagonalKind::Lq, window);
  stamp(t, coeffs);
  for (int n = window.lo; n < window.hi; ++n) {
    t.sub[static_cast<std::size_t>(n - window.lo)] = coeffs.beta * (1.0 + coeffs.gamma_at(n));
    t.super[static_cast<std::size_t>(n - window.lo)] =
        -std::conj(coeffs.beta) * (1.0 + coeffs.gamma_at(n + 1));
  }
  return t;
}

SignatureOperator build_signature(const SliceDescriptor& slice, IndexWindow window) {
  if (!slice.disk_window)
    throw std::invalid_argument("build_signature: slice has no in-disk indices");
  if (!window.contains(*slice.disk_window))
    throw std::invalid_argument("build_signature: window must contain the in-disk interval");
  SignatureOperator j;
  j.n_lo = window.lo;
  j.n_hi = window.hi;
  j.signs.resize(static_cast<std::size_t>(window.size()));
  for (int n = window.lo; n <= window.hi; ++n)
    j.signs[static_cast<std::size_t>(n - window.lo)] = slice.disk_window->contains(n) ? 1 : -1;
  return j;
}

void BoxOperator2D::apply(const Complex* x, Complex* y) const {
  for (int r = 0; r < dim(); ++r) {
    Complex acc(0.0, 0.0);
    for (const Entry& e : rows[static_cast<std::size_t>(r)]) acc += e.value * x[e.col];
    y[r] = acc;
  }
}

Eigen::MatrixXcd BoxOperator2D::to_dense() const {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int r = 0; r < dim(); ++r)
    for (const Entry& e : rows[static_cast<std::size_t>(r)]) a(r, e.col) = e.value;
  return a;
}

double BoxOperator2D::norm_upper_bound() const {
  std::vector<double> col_sums(static_cast<std::size_t>(dim()), 0.0);
  double row_max = 0.0;
  for (int r = 0; r < dim(); ++r) {
    double row_sum = 0.0;
    for (const Entry& e : rows[static_cast<std::size_t>(r)]) {
      const double a = std::abs(e.value);
      row_sum += a;
      col_sums[static_cast<std::size_t>(e.col)] += a;
    }
    row_max = std::max(row_max, row_sum);
  }
  double col_max = 0.0;
  for (double s : col_sums) col_max = std::max(col_max, s);
  return std::sqrt(row_max * col_max);
}

BoxOperator2D build_L2D(const ProblemInstance& inst, int K) {
  const LatticeVector& p = inst.p;
  if (p.is_zero()) throw std::invalid_argument("build_L2D: p must be nonzero");
  const std::int64_t p_inf = std::max(std::llabs(p.x), std::llabs(p.y));
  if (K < p_inf + 1)
    throw std::invalid_argument("build_L2D: K must be at least ||p||_inf + 1");

  BoxOperator2D box;
  box.K = K;
  box.p = p;
  box.circulation = inst.gamma;
  for (std::int64_t x = -K; x <= K; ++x)
    for (std::int64_t y = -K; y <= K; ++y) {
      const LatticeVector k{x, y};
      if (k.is_zero()) continue;
      box.mode_index.emplace(k, static_cast<int>(box.modes.size()));
      box.modes.push_back(k);
    }

  box.rows.resize(box.modes.size());
  for (int r = 0; r < box.dim(); ++r) {
    const LatticeVector k = box.modes[static_cast<std::size_t>(r)];
    const auto couple = [&](const LatticeVector& to, Complex weight) {
      if (weight == Complex(0.0, 0.0)) return;
      const auto it = box.mode_index.find(to);
      if (it != box.mode_index.end())
        box.rows[static_cast<std::size_t>(r)].push_back({it->second, weight});
    };
    couple(k - p, interaction_coefficient(p, k - p) * inst.gamma);
    couple(k + p, interaction_coefficient(-p, k + p) * std::conj(inst.gamma));
  }
  return box;
}

}  // namespace eulerspec
