#include "eulerspec/lattice.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace eulerspec {

std::int64_t det2(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.y - a.y * b.x;
}

std::int64_t norm_sq(const LatticeVector& v) { return v.x * v.x + v.y * v.y; }

double norm(const LatticeVector& v) { return std::sqrt(static_cast<double>(norm_sq(v))); }

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.x + a.y * b.y;
}

bool is_collinear(const LatticeVector& q, const LatticeVector& p) {
  if (p.is_zero()) throw std::invalid_argument("is_collinear: p must be nonzero");
  return det2(q, p) == 0;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0 in all call sites
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

LatticeVector slice_representative(const LatticeVector& q, const LatticeVector& p) {
  if (p.is_zero()) throw std::invalid_argument("slice_representative: p must be nonzero");
  // ||q + n p||^2 is a convex quadratic in n with real minimizer -(q.p)/||p||^2;
  // only the two neighboring integers can attain the minimum.
  const std::int64_t den = norm_sq(p);
  const std::int64_t n_lo = floor_div(-dot(q, p), den);
  const std::int64_t n_hi = n_lo + 1;
  const std::int64_t f_lo = norm_sq(q + p * n_lo);
  const std::int64_t f_hi = norm_sq(q + p * n_hi);
  // On an exact tie the larger shift index wins.
  return f_lo < f_hi ? q + p * n_lo : q + p * n_hi;
}

std::vector<LatticeVector> enumerate_inner_points(const LatticeVector& p) {
  if (p.is_zero()) throw std::invalid_argument("enumerate_inner_points: p must be nonzero");
  const std::int64_t r2 = norm_sq(p);
  std::int64_t m = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(r2))));
  while (m * m < r2) ++m;
  std::vector<LatticeVector> out;
  for (std::int64_t x = -m; x <= m; ++x)
    for (std::int64_t y = -m; y <= m; ++y) {
      const LatticeVector v{x, y};
      if (norm_sq(v) < r2 && det2(v, p) != 0) out.push_back(v);
    }
  return out;  // lexicographic by construction
}

int kappa(const LatticeVector& p) {
  return static_cast<int>(enumerate_inner_points(p).size());
}

namespace {

// Indices n with ||qhat + n p|| < ||p||; empty unless ||qhat|| < ||p||.
// Contiguity follows from convexity of ||qhat + n p||^2 in n.
std::optional<IndexWindow> disk_window_of(const LatticeVector& qhat, const LatticeVector& p) {
  const std::int64_t r2 = norm_sq(p);
  if (norm_sq(qhat) >= r2) return std::nullopt;
  int lo = 0, hi = 0;
  while (norm_sq(qhat + p * (hi + 1)) < r2) ++hi;
  while (norm_sq(qhat + p * (lo - 1)) < r2) --lo;
  return IndexWindow{lo, hi};
}

}  // namespace

std::vector<SliceDescriptor> contributing_slices(const LatticeVector& p) {
  std::map<LatticeVector, std::vector<std::int64_t>> groups;
  const std::int64_t den = norm_sq(p);
  for (const LatticeVector& v : enumerate_inner_points(p)) {
    const LatticeVector qhat = slice_representative(v, p);
    const std::int64_t num = dot(v - qhat, p);
    if (num % den != 0)
      throw std::logic_error("contributing_slices: point not on its representative's slice");
    groups[qhat].push_back(num / den);
  }
  std::vector<SliceDescriptor> out;
  out.reserve(groups.size());
  for (const auto& [qhat, ns] : groups) {
    const auto window = disk_window_of(qhat, p);
    if (!window || window->size() != static_cast<int>(ns.size()))
      throw std::logic_error("contributing_slices: in-disk window mismatch");
    out.push_back(SliceDescriptor{qhat, p, window});
  }
  return out;  // sorted by representative via map ordering
}

std::vector<SliceDescriptor> enumerate_representatives(const LatticeVector& p, double radius) {
  if (p.is_zero()) throw std::invalid_argument("enumerate_representatives: p must be nonzero");
  const double r2 = radius * radius;
  const std::int64_t m = radius >= 1.0 ? static_cast<std::int64_t>(std::floor(radius)) : 0;
  std::set<LatticeVector> reps;
  for (std::int64_t x = -m; x <= m; ++x)
    for (std::int64_t y = -m; y <= m; ++y) {
      const LatticeVector q{x, y};
      if (q.is_zero() || static_cast<double>(norm_sq(q)) > r2 || det2(q, p) == 0) continue;
      // The representative has minimal norm on its slice, so it stays in range.
      reps.insert(slice_representative(q, p));
    }
  std::vector<SliceDescriptor> out;
  out.reserve(reps.size());
  for (const LatticeVector& qhat : reps)
    out.push_back(SliceDescriptor{qhat, p, disk_window_of(qhat, p)});
  return out;
}

}  // namespace eulerspec
