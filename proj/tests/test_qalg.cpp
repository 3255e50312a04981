#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "qvol/qpoly.hpp"
#include "qvol/qrat.hpp"
#include "qvol/qseries.hpp"

using namespace qvol;

namespace {

QPoly poly(std::vector<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return QPoly(v);
}

// Counts partitions fitting in a k x (n-k) box by coarea; generating
// function must equal the Gaussian binomial coefficient.
QPoly box_partition_gf(int k, int m) {
  // dp over columns: dp[j] = gf for partitions with parts <= m, at most k
  // parts ... simple DP: add parts 1..m each usable up to k times? Use the
  // standard recursion C(n,k) via lattice paths: build by rows.
  std::vector<std::vector<Int>> dp(k + 1, std::vector<Int>(k * m + 1, 0));
  // dp[r][s]: number of partitions with at most r parts, each <= m, size s.
  for (int s = 0; s <= k * m; ++s) dp[0][s] = (s == 0) ? 1 : 0;
  for (int r = 1; r <= k; ++r) {
    for (int s = 0; s <= k * m; ++s) {
      dp[r][s] = dp[r - 1][s];  // largest part absent / fewer rows
    }
    // allow any first part 1..m with remaining parts <= that part: easier
    // recursion: partitions in r x m box: C(r+m, r) satisfies
    // C(r+m,r) = C(r+m-1,r-1) + q^r C(r+m-1, r) ... instead enumerate
    // directly below.
  }
  // Direct enumeration by recursion over parts (k small in tests).
  std::vector<Int> gf(k * m + 1, 0);
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int remaining_rows, int maxpart,
                                               int size) {
    gf[size] += 1;
    if (remaining_rows == 0) return;
    for (int p = 1; p <= maxpart; ++p) {
      rec(remaining_rows - 1, p, size + p);
    }
  };
  rec(k, m, 0);
  return QPoly(gf);
}

// Sum of q^{inv(w)} over all permutations of {1..n}.
QPoly inv_gf(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  std::vector<Int> gf(n * (n - 1) / 2 + 1, 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w[i] > w[j]) ++inv;
    gf[inv] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return QPoly(gf);
}

QRat random_qrat(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
  auto rand_poly = [&](bool nonzero) {
    while (true) {
      std::vector<Int> cs(deg(rng) + 1);
      for (auto& c : cs) c = coef(rng);
      QPoly p(cs);
      if (!nonzero || p.degree() >= 0) return p;
    }
  };
  return QRat(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_CASE("q-integer basics") {
  CHECK(q_number(0) == QPoly());
  CHECK(q_number(1) == poly({1}));
  CHECK(q_number(3) == poly({1, 1, 1}));
  CHECK(q_factorial(0) == poly({1}));
  // [4]_q! = (1)(1+q)(1+q+q^2)(1+q+q^2+q^3)
  CHECK(q_factorial(4) ==
        poly({1}) * poly({1, 1}) * poly({1, 1, 1}) * poly({1, 1, 1, 1}));
  CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(q_binomial(5, 0) == poly({1}));
  CHECK(q_binomial(3, 5) == QPoly());
}

TEST_CASE("gaussian binomial counts partitions in a box") {
  for (int k = 0; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m)
      CHECK(q_binomial(k + m, k) == box_partition_gf(k, m));
}

TEST_CASE("q-factorial is the inversion generating function") {
  for (int n = 1; n <= 6; ++n) CHECK(q_factorial(n) == inv_gf(n));
}

TEST_CASE("pochhammer with q-power argument") {
  // (q;q)_2 = (1-q)(1-q^2)
  CHECK(q_pochhammer_qpow(1, 2) == poly({1, -1}) * poly({1, 0, -1}));
  CHECK(q_pochhammer_qpow(3, 0) == poly({1}));
}

TEST_CASE("polynomial arithmetic and exact division") {
  QPoly a = poly({1, 2, 1});
  QPoly b = poly({1, 1});
  CHECK(a == b * b);
  CHECK(a.divide_exact(b) == b);
  CHECK_THROWS_AS(poly({1, 1, 1}).divide_exact(poly({1, 1})),
                  arithmetic_error);
  CHECK(QPoly::gcd(poly({1, -1}) * poly({1, 1}), poly({1, 1}) * poly({2, 3})) ==
        poly({1, 1}));
}

TEST_CASE("rational function field") {
  QRat half = QRat(poly({1}), poly({1, 1}));  // 1/(1+q)
  CHECK(half + half == QRat(poly({2}), poly({1, 1})));
  CHECK(half * QRat(poly({1, 1})) == QRat(1));
  CHECK(QRat::q_power(-2) * QRat::q_power(2) == QRat(1));
  CHECK(q_gamma_int(3) == QRat(poly({1, 1})));  // [2]_q! = 1+q
  CHECK(q_gamma_int(1) == QRat(1));
  QRat x = QRat(poly({0, 1}), poly({1, -1}));
  CHECK(x.eval(Rat(1, 2)) == Rat(1));
}

TEST_CASE("rational function randomized ring identities") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 200; ++t) {
    QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("series expansion") {
  QRat geo = QRat(poly({1}), poly({1, -1}));  // 1/(1-q)
  QSeries s = expand_series(geo, 3);
  for (int k = 0; k <= 3; ++k) CHECK(s.coeff(k) == 1);
  CHECK_THROWS_AS(expand_series(QRat(poly({1}), poly({0, 1})), 3),
                  arithmetic_error);
  // prefix consistency
  QRat r = QRat(poly({2, 0, -1}), poly({1, 1, 3}));
  QSeries big = expand_series(r, 20);
  QSeries small = expand_series(r, 7);
  CHECK(big.truncate(7) == small);
  // polynomial round trip
  QSeries p = expand_series(q_binomial(4, 2), 10);
  QSeries via_rat = expand_series(QRat(q_binomial(4, 2)), 10);
  CHECK(p == via_rat);
}

TEST_CASE("series arithmetic matches rational arithmetic") {
  std::mt19937 rng(777);
  for (int t = 0; t < 50; ++t) {
    QRat a = random_qrat(rng), b = random_qrat(rng);
    if (a.den().eval(Rat(0)) == 0 || b.den().eval(Rat(0)) == 0) continue;
    CHECK(expand_series(a, 12) * expand_series(b, 12) ==
          expand_series(a * b, 12));
    CHECK(expand_series(a, 12) + expand_series(b, 12) ==
          expand_series(a + b, 12));
  }
}
