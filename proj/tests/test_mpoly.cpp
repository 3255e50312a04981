#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "qvol/mpoly.hpp"

using namespace qvol;

namespace {

// Schur polynomial by brute-force enumeration of semistandard tableaux
// (rows weakly increase, columns strictly increase, entries in 1..n).
MLaurent schur_ssyt(const Partition& lambda, int n) {
  int l = lambda.length();
  if (l > n) return MLaurent::zero(n);
  std::vector<std::vector<int>> T(l);
  for (int i = 0; i < l; ++i) T[i].assign(lambda.part(i + 1), 0);
  MLaurent gf = MLaurent::zero(n);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == l) {
      std::vector<int> content(n, 0);
      for (auto& row : T)
        for (int v : row) ++content[v - 1];
      gf.add_term(content, QRat(1));
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.part(r + 1)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0 && c < lambda.part(r)) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      T[r][c] = v;
      rec(nr, nc);
    }
  };
  rec(0, 0);
  return gf;
}

// Alternant det(x_i^{mu_j}) for mu = lambda + staircase.
MLaurent alternant(const Partition& lambda, int n) {
  std::vector<int> mu(n);
  for (int j = 0; j < n; ++j) mu[j] = lambda.part(j + 1) + (n - 1 - j);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  MLaurent det = MLaurent::zero(n);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = mu[perm[i]];
    det += MLaurent::monomial(n, e, QRat(inv % 2 ? -1L : 1L));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p{4, 2, 1};
  CHECK(p.size() == 7);
  CHECK(p.b_stat() == 2 * 1 + 1 * 2);
  CHECK(p.transpose() == Partition{3, 2, 1, 1});
  CHECK(p.transpose().transpose() == p);
  CHECK(Partition::staircase(4) == Partition{3, 2, 1});
  CHECK(Partition::add(Partition{2, 1}, Partition::staircase(3)) ==
        Partition{4, 2});
  CHECK(Partition{}.length() == 0);
  CHECK_THROWS_AS(Partition({1, 3}), arithmetic_error);
}

TEST_CASE("laurent ring sanity") {
  MLaurent x = MLaurent::var(2, 1), y = MLaurent::var(2, 2);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y - y * x).is_zero());
  MLaurent inv_x = MLaurent::monomial(2, {-1, 0}, QRat(1));
  CHECK(x * inv_x == MLaurent::constant(2, QRat(1)));
  CHECK(inv_x.min_exponent(1) == -1);
  // substitute x = q^2, y = q^3 into x*y + 1
  QRat v = (x * y + MLaurent::constant(2, QRat(1))).substitute_qpowers({2, 3});
  CHECK(v == QRat::q_power(5) + QRat(1));
}

TEST_CASE("vandermonde") {
  int n = 3;
  MLaurent d = vandermonde_bar(n);
  // (x2-x1)(x3-x1)(x3-x2): 6 terms
  CHECK(d.terms().size() == 6);
  // antisymmetry under swapping two variables via substitution
  CHECK(d.substitute_qpowers({0, 1, 2}) == -vandermonde_bar(n).substitute_qpowers({1, 0, 2}));
  // DeltaBar(q^{delta reversed order}) check: (q-1)(q^2-1)(q^2-q)
  QRat expect = (QRat::q_power(1) - QRat(1)) * (QRat::q_power(2) - QRat(1)) *
                (QRat::q_power(2) - QRat::q_power(1));
  CHECK(d.substitute_qpowers({0, 1, 2}) == expect);
}

TEST_CASE("schur matches tableau enumeration") {
  std::vector<Partition> shapes = {Partition{}, Partition{1}, Partition{2},
                                   Partition{1, 1}, Partition{2, 1},
                                   Partition{3, 1}, Partition{2, 2, 1}};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : shapes) {
      CHECK(schur(lam, n) == schur_ssyt(lam, n));
    }
  }
}

TEST_CASE("schur bialternant identity") {
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& lam : {Partition{2, 1}, Partition{3}, Partition{1, 1}}) {
      long sign = ((static_cast<long>(n) * (n - 1) / 2) % 2) ? -1 : 1;
      CHECK(schur(lam, n) * vandermonde_bar(n) * QRat(sign) == alternant(lam, n));
    }
  }
}

TEST_CASE("schur principal specialization") {
  // s_lambda(1, q, ..., q^{n-1}) = q^{b(lambda)} prod_{i<j}
  //   (1-q^{lam_i-lam_j+j-i})/(1-q^{j-i})  (hook-content equivalent form)
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& lam : {Partition{2, 1}, Partition{3, 2}, Partition{1, 1, 1}}) {
      if (lam.length() > n) continue;
      std::vector<int> e(n);
      for (int i = 0; i < n; ++i) e[i] = i;
      QRat lhs = schur(lam, n).substitute_qpowers(e);
      QRat rhs = QRat::q_power(static_cast<int>(lam.b_stat()));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          rhs *= QRat(QPoly(1) - QPoly::q_power(lam.part(i) - lam.part(j) + j - i)) /
                 QRat(QPoly(1) - QPoly::q_power(j - i));
        }
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pochhammer factors") {
  // (q^0 * x1/x2; q)_2 at x1=q^3, x2=q^1 equals (q^2;q)_2
  MLaurent p = pochhammer_ratio(2, 0, 1, 2, 2);
  CHECK(p.substitute_qpowers({3, 1}) == q_pochhammer_scalar(QRat::q_power(2), 2));
  // i = 0 gives constant (q^c;q)_m
  MLaurent c = pochhammer_ratio(1, 2, 0, 1, 3);
  CHECK(c.substitute_qpowers({5}) ==
        q_pochhammer_scalar(QRat::q_power(2 - 5), 3));
  // pochhammer_var: (a x; q)_m at x = q^k is (a q^k; q)_m
  MLaurent v = pochhammer_var(1, QRat::q_power(1), 1, 3);
  CHECK(v.substitute_qpowers({2}) == q_pochhammer_scalar(QRat::q_power(3), 3));
}
