#ifndef EULERSPEC_MATCHING_HPP
#define EULERSPEC_MATCHING_HPP

#include <vector>

#include "eulerspec/coefficients.hpp"

namespace eulerspec {

/// Outcome of pairing two eigenvalue multisets one-to-one.
struct MatchResult {
  bool ok = false;          // sizes equal and max pair distance <= tol
  double max_dist = 0.0;    // infinity when the sizes differ
  std::vector<int> assignment;  // assignment[i] = index in b paired with a[i]
};

/// Pairs a against b minimizing the largest |a_i - b_assignment[i]|: cheap
/// sorted pairing first, then greedy nearest-neighbor, then a Hungarian
/// assignment when the greedy residual still exceeds tol.
MatchResult match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b,
                            double tol);

/// Minimum-total-cost assignment for a square cost matrix (O(n^3) Hungarian).
std::vector<int> hungarian_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace eulerspec

#endif
