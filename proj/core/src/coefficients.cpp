#include "eulerspec/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerspec {

double interaction_coefficient(const LatticeVector& p, const LatticeVector& q) {
  if (p.is_zero() || q.is_zero() || p == q || p == -q) return 0.0;
  const double inv_p = 1.0 / static_cast<double>(norm_sq(p));
  const double inv_q = 1.0 / static_cast<double>(norm_sq(q));
  return 0.5 * (inv_p - inv_q) * static_cast<double>(det2(p, q));
}

SliceCoefficients slice_coefficients(const ProblemInstance& inst, const SliceDescriptor& slice,
                                     IndexWindow n_range) {
  const LatticeVector& p = inst.p;
  if (p.is_zero()) throw std::invalid_argument("slice_coefficients: p must be nonzero");
  if (det2(slice.qhat, p) == 0)
    throw std::invalid_argument("slice_coefficients: collinear slice has no coefficients");

  const double p2 = static_cast<double>(norm_sq(p));
  SliceCoefficients c;
  c.p = p;
  c.qhat = slice.qhat;
  c.circulation = inst.gamma;
  c.beta = -(static_cast<double>(det2(slice.qhat, p)) / (2.0 * p2)) * inst.gamma;
  // For Gamma = 0 the slice operator vanishes; keep alpha at a fixed unit value.
  c.alpha = c.beta == Complex(0.0, 0.0) ? Complex(0.0, 1.0)
                                        : Complex(0.0, 1.0) * c.beta / std::abs(c.beta);
  c.n_lo = n_range.lo;
  c.n_hi = n_range.hi;
  c.gamma.reserve(static_cast<std::size_t>(n_range.size()));
  c.delta.reserve(static_cast<std::size_t>(n_range.size()));
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    // ||qhat + n p||^2 - ||p||^2 decides the branch of delta with an exact sign.
    const std::int64_t den = norm_sq(slice.qhat + p * n);
    const std::int64_t num = den - norm_sq(p);
    c.gamma.push_back(-p2 / static_cast<double>(den));
    const double ratio = static_cast<double>(std::llabs(num)) / static_cast<double>(den);
    c.delta.push_back(num >= 0 ? Complex(std::sqrt(ratio), 0.0)
                               : Complex(0.0, std::sqrt(ratio)));
  }
  return c;
}

SteadyFields steady_state_fields(const ProblemInstance& inst, double x, double y) {
  const double a = inst.gamma.real();
  const double b = inst.gamma.imag();
  const double theta = static_cast<double>(inst.p.x) * x + static_cast<double>(inst.p.y) * y;
  const double c = std::cos(theta), s = std::sin(theta);
  const double p2 = static_cast<double>(norm_sq(inst.p));
  SteadyFields f;
  f.Omega0 = a * c - b * s;
  f.u0 = (-static_cast<double>(inst.p.y) * (a * s + b * c)) / p2;
  f.v0 = (static_cast<double>(inst.p.x) * (a * s + b * c)) / p2;
  return f;
}

}  // namespace eulerspec
