#ifndef EULERSPEC_LATTICE_HPP
#define EULERSPEC_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace eulerspec {

/// Integer Fourier index in Z^2.
struct LatticeVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  LatticeVector operator+(const LatticeVector& o) const { return {x + o.x, y + o.y}; }
  LatticeVector operator-(const LatticeVector& o) const { return {x - o.x, y - o.y}; }
  LatticeVector operator-() const { return {-x, -y}; }
  LatticeVector operator*(std::int64_t t) const { return {x * t, y * t}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

std::int64_t det2(const LatticeVector& a, const LatticeVector& b);
std::int64_t norm_sq(const LatticeVector& v);
double norm(const LatticeVector& v);
std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

/// True iff q lies on the line R*p. Rejects p = 0.
bool is_collinear(const LatticeVector& q, const LatticeVector& p);

/// Contiguous integer interval [lo, hi].
struct IndexWindow {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool contains(int n) const { return lo <= n && n <= hi; }
  bool contains(const IndexWindow& w) const { return lo <= w.lo && w.hi <= hi; }

  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

/// One line {qhat + n p : n in Z} of the grid, keyed by its minimal-norm
/// representative. disk_window, when present, is the set of n with
/// ||qhat + n p|| < ||p|| (always contiguous).
struct SliceDescriptor {
  LatticeVector qhat;
  LatticeVector p;
  std::optional<IndexWindow> disk_window;
};

/// Minimal-norm point of the slice through q; on a two-way tie the candidate
/// with the larger shift index wins. Rejects p = 0.
LatticeVector slice_representative(const LatticeVector& q, const LatticeVector& p);

/// All lattice points strictly inside the open disk of radius ||p|| that are
/// not collinear with p, in lexicographic order.
std::vector<LatticeVector> enumerate_inner_points(const LatticeVector& p);

/// Number of inner points; always even.
int kappa(const LatticeVector& p);

/// Inner points grouped by slice. Each descriptor carries the in-disk index
/// window; window sizes sum to kappa(p).
std::vector<SliceDescriptor> contributing_slices(const LatticeVector& p);

/// All distinct slice representatives with 0 < ||qhat|| <= radius, not
/// collinear with p. Representatives of distinct outputs never differ by a
/// multiple of p.
std::vector<SliceDescriptor> enumerate_representatives(const LatticeVector& p, double radius);

}  // namespace eulerspec

#endif
