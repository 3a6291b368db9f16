#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "eulerspec/matching.hpp"

using namespace eulerspec;

TEST_CASE("empty multisets match") {
  const auto r = match_multisets({}, {}, 0.0);
  CHECK(r.ok);
  CHECK(r.max_dist == 0.0);
}

TEST_CASE("size mismatch is reported as infinite distance") {
  const auto r = match_multisets({Complex(1, 0)}, {Complex(1, 0), Complex(2, 0)}, 10.0);
  CHECK_FALSE(r.ok);
  CHECK(r.max_dist == std::numeric_limits<double>::infinity());
}

TEST_CASE("permutations match exactly") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> a(64);
  for (auto& v : a) v = Complex(g(rng), g(rng));
  std::vector<Complex> b = a;
  std::shuffle(b.begin(), b.end(), rng);
  const auto r = match_multisets(a, b, 0.0);
  CHECK(r.ok);
  CHECK(r.max_dist == 0.0);
  // assignment is a permutation sending a[i] onto an equal b element
  std::vector<int> seen(b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(r.assignment[i] >= 0);
    REQUIRE(r.assignment[i] < static_cast<int>(b.size()));
    CHECK(a[i] == b[static_cast<std::size_t>(r.assignment[i])]);
    seen[static_cast<std::size_t>(r.assignment[i])] += 1;
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST_CASE("small perturbations stay within tolerance") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  std::vector<Complex> a(40), b;
  for (auto& v : a) v = Complex(g(rng), g(rng));
  b = a;
  for (auto& v : b) v += 1e-9 * std::exp(Complex(0.0, phase(rng)));
  std::shuffle(b.begin(), b.end(), rng);
  const auto r = match_multisets(a, b, 2e-9);
  CHECK(r.ok);
  CHECK(r.max_dist <= 1e-9 + 1e-14);  // perturbation plus rounding on O(1) values
  CHECK(r.max_dist > 0.0);
}

TEST_CASE("distinct clusters exceed tolerance") {
  const std::vector<Complex> a{Complex(0, 1), Complex(0, -1)};
  const std::vector<Complex> b{Complex(0, 1), Complex(0.5, -1)};
  const auto r = match_multisets(a, b, 1e-3);
  CHECK_FALSE(r.ok);
  CHECK(r.max_dist == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hungarian assignment beats per-element sorting") {
  // Sorted by (re, im), a = [(0,0), (0,1)] pairs with b = [(0,0.9), (0.1,0)]
  // in order, giving max distance 0.9; the optimal pairing crosses and gives
  // 0.1.
  const std::vector<Complex> a{Complex(0, 0), Complex(0, 1)};
  const std::vector<Complex> b{Complex(0, 0.9), Complex(0.1, 0)};
  const auto r = match_multisets(a, b, 0.2);
  CHECK(r.ok);
  CHECK(r.max_dist <= 0.1 + 1e-12);
}

TEST_CASE("hungarian assignment minimizes total cost") {
  const std::vector<std::vector<double>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  const auto pick = hungarian_assignment(cost);
  double total = 0.0;
  for (std::size_t i = 0; i < pick.size(); ++i) total += cost[i][static_cast<std::size_t>(pick[i])];

  // brute-force optimum over all 3! permutations
  std::vector<int> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    double t = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) t += cost[i][static_cast<std::size_t>(perm[i])];
    best = std::min(best, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(total == doctest::Approx(best));
}

TEST_CASE("random cost matrices agree with brute force") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost)
      for (auto& c : row) c = u(rng);

    const auto pick = hungarian_assignment(cost);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i][static_cast<std::size_t>(pick[i])];

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += cost[i][static_cast<std::size_t>(perm[i])];
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(total == doctest::Approx(best).epsilon(1e-12));
  }
}
