#include "eulerspec/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace eulerspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool complex_less(const Complex& u, const Complex& v) {
  if (u.real() != v.real()) return u.real() < v.real();
  return u.imag() < v.imag();
}

double max_pair_dist(const std::vector<Complex>& a, const std::vector<Complex>& b,
                     const std::vector<int>& assignment) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[static_cast<std::size_t>(assignment[i])]));
  return m;
}

std::vector<int> sorted_pairing(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t n = a.size();
  std::vector<int> ia(n), ib(n);
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), 0);
  const auto by_value = [](const std::vector<Complex>& v) {
    return [&v](int i, int j) {
      return complex_less(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    };
  };
  std::sort(ia.begin(), ia.end(), by_value(a));
  std::sort(ib.begin(), ib.end(), by_value(b));
  std::vector<int> assignment(n);
  for (std::size_t r = 0; r < n; ++r)
    assignment[static_cast<std::size_t>(ia[r])] = ib[r];
  return assignment;
}

std::vector<int> greedy_pairing(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t n = a.size();
  std::vector<int> assignment(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    double best = kInf;
    int pick = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(a[i] - b[j]);
      if (d < best) {
        best = d;
        pick = static_cast<int>(j);
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    assignment[i] = pick;
  }
  return assignment;
}

}  // namespace

std::vector<int> hungarian_assignment(const std::vector<std::vector<double>>& cost) {
  // Potential-based Hungarian algorithm on an (n+1)-padded grid; row/column
  // index 0 is the dummy used to start each augmenting path.
  const int n = static_cast<int>(cost.size());
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);    // column -> matched row
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);  // column -> previous column
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = p[static_cast<std::size_t>(j0)];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                           u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    for (; j0 != 0;) {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    }
  }
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<std::size_t>(j)] != 0)
      assignment[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return assignment;
}

MatchResult match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b,
                            double tol) {
  MatchResult r;
  if (a.size() != b.size()) {
    r.max_dist = kInf;
    return r;
  }
  if (a.empty()) {
    r.ok = true;
    return r;
  }

  r.assignment = sorted_pairing(a, b);
  r.max_dist = max_pair_dist(a, b, r.assignment);
  if (r.max_dist <= tol) {
    r.ok = true;
    return r;
  }

  auto greedy = greedy_pairing(a, b);
  double greedy_dist = max_pair_dist(a, b, greedy);
  if (greedy_dist < r.max_dist) {
    r.assignment = std::move(greedy);
    r.max_dist = greedy_dist;
  }
  if (r.max_dist <= tol) {
    r.ok = true;
    return r;
  }

  const std::size_t n = a.size();
  if (n <= 2500) {  // keep the exact fallback affordable
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(a[i] - b[j]);
    auto exact = hungarian_assignment(cost);
    const double exact_dist = max_pair_dist(a, b, exact);
    if (exact_dist < r.max_dist) {
      r.assignment = std::move(exact);
      r.max_dist = exact_dist;
    }
  }
  r.ok = r.max_dist <= tol;
  return r;
}

}  // namespace eulerspec
