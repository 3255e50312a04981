#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qvol/qint.hpp"
#include "qvol/qseries.hpp"

using namespace qvol;

namespace {

QRat as_constant(const MLaurent& f) {
  QRat r(0L);
  for (const auto& [e, c] : f.terms()) {
    for (int x : e) REQUIRE(x == 0);
    r += c;
  }
  return r;
}

QRat one_minus_q() { return QRat(1) - QRat::q_power(1); }

}  // namespace

TEST_CASE("single-variable integral") {
  for (int n = 0; n <= 5; ++n) {
    MLaurent f = MLaurent::monomial(1, {n}, QRat(1));
    QRat v = as_constant(qint_1d(f, 0, Bound::zero(), Bound::one()));
    CHECK(v == QRat(QPoly(1), q_number(n + 1)));
  }
  // equal bounds
  MLaurent one = MLaurent::constant(1, QRat(1));
  CHECK(as_constant(qint_1d(one, 0, Bound::qpow(2), Bound::qpow(2))).is_zero());
  // symbolic upper bound: int_0^{x2} x1 d_qx1 = x2^2/[2]_q
  MLaurent x1 = MLaurent::var(2, 1);
  MLaurent g = qint_1d(x1, 0, Bound::zero(), Bound::var(1));
  MLaurent expect = MLaurent::monomial(2, {0, 2}, QRat(QPoly(1), q_number(2)));
  CHECK(g == expect);
  // nonintegrable exponent
  CHECK_THROWS_AS(qint_1d(MLaurent::monomial(1, {-1}, QRat(1)), 0,
                          Bound::zero(), Bound::one()),
                  arithmetic_error);
  CHECK_THROWS_AS(qint_1d(MLaurent::monomial(1, {-3}, QRat(1)), 0,
                          Bound::zero(), Bound::one()),
                  arithmetic_error);
}

TEST_CASE("integral matches truncated defining sum") {
  // (1-q) sum_{i=0}^{400} (f(b q^i) b q^i - f(a q^i) a q^i), as a series
  // through degree 40.
  const int D = 40, CUT = 400;
  std::vector<int> kb_opts = {-1, 2, 1, 0};  // -1 encodes bound 0
  for (int e = 0; e <= 5; ++e) {
    for (int ka : kb_opts) {
      for (int kb : kb_opts) {
        Bound a = (ka < 0) ? Bound::zero() : Bound::qpow(ka);
        Bound b = (kb < 0) ? Bound::zero() : Bound::qpow(kb);
        MLaurent f = MLaurent::monomial(1, {e}, QRat(1));
        QRat v = as_constant(qint_1d(f, 0, a, b));
        QSeries partial(D);
        for (int i = 0; i <= CUT; ++i) {
          if (kb >= 0) {
            long ex = static_cast<long>(kb + i) * (e + 1);
            if (ex <= D) partial.coeff(static_cast<int>(ex)) += 1;
          }
          if (ka >= 0) {
            long ex = static_cast<long>(ka + i) * (e + 1);
            if (ex <= D) partial.coeff(static_cast<int>(ex)) -= 1;
          }
        }
        partial = partial * expand_series(one_minus_q(), D);
        CHECK(expand_series(v, D) == partial);
      }
    }
  }
}

TEST_CASE("order of integration matters on the triangle") {
  MLaurent one = MLaurent::constant(2, QRat(1));
  std::vector<int> chain = {0, 1};
  QRat first = qint_simplex(one, chain, Bound::zero(), Bound::one(), {0, 1});
  QRat second = qint_simplex(one, chain, Bound::zero(), Bound::one(), {1, 0});
  CHECK(first == QRat(QPoly(1), QPoly({std::vector<Int>{1, 1}})));
  CHECK(second == QRat(QPoly::q_power(1), QPoly({std::vector<Int>{1, 1}})));
  FubiniDefect d = fubini_defect(one, Bound::zero(), Bound::one());
  CHECK(d.difference == first - second);
  CHECK(d.equal());
  // integrand vanishing on the diagonal: defect 0
  MLaurent y_minus_x = MLaurent::var(2, 2) - MLaurent::var(2, 1);
  FubiniDefect d2 = fubini_defect(y_minus_x, Bound::zero(), Bound::one());
  CHECK(d2.equal());
  CHECK(d2.difference.is_zero());
}

TEST_CASE("fubini defect identity on random integrands") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ed(0, 3), cd(-3, 3);
  for (int t = 0; t < 30; ++t) {
    MLaurent f(2);
    for (int terms = 0; terms < 4; ++terms) {
      f.add_term({ed(rng), ed(rng)}, QRat(static_cast<long>(cd(rng))));
    }
    FubiniDefect d = fubini_defect(f, Bound::qpow(2), Bound::one());
    CHECK(d.equal());
  }
}

TEST_CASE("fubini holds over product boxes") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ed(0, 3);
  for (int t = 0; t < 20; ++t) {
    MLaurent f(2);
    f.add_term({ed(rng), ed(rng)}, QRat(2L));
    f.add_term({ed(rng), ed(rng)}, QRat(-1L));
    // independent boxes x in [a,b], y in [c,d]
    MLaurent gx = qint_1d(f, 0, Bound::qpow(3), Bound::one());
    QRat xy = as_constant(qint_1d(gx, 1, Bound::zero(), Bound::qpow(1)));
    MLaurent gy = qint_1d(f, 1, Bound::zero(), Bound::qpow(1));
    QRat yx = as_constant(qint_1d(gy, 0, Bound::qpow(3), Bound::one()));
    CHECK(xy == yx);
  }
}

TEST_CASE("truncated simplex volume closed form") {
  for (int n = 2; n <= 4; ++n) {
    MLaurent one = MLaurent::constant(n, QRat(1));
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    do {
      std::vector<int> word(n);
      for (int i = 0; i < n; ++i) word[i] = pi[i] + 1;
      WordStats st = word_stats(word);
      for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 0}, {3, 1}, {4, 0}}) {
        QRat lhs = qint_simplex(one, pi, Bound::qpow(r), Bound::qpow(s));
        QRat rhs = QRat::q_power(s * n + static_cast<int>(st.maj)) *
                   q_pochhammer_scalar(QRat::q_power(r - s - st.des), n) /
                   QRat(q_factorial(n));
        CHECK(lhs == rhs);
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
}

TEST_CASE("order polytope volume equals maj generating function") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 4;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) == 0) rel.emplace_back(i, j);
    Poset P(n, rel);
    MLaurent one = MLaurent::constant(n, QRat(1));
    QRat v = qint_order_polytope(one, P, natural_labeling(n), Bound::zero(),
                                 Bound::one());
    CHECK(v == QRat(maj_gf(P, natural_labeling(n)), q_factorial(n)));
  }
}

TEST_CASE("simplex engine agrees with restricted partition sum") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coin(0, 2), ed(0, 3), rd(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 4;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) == 0) rel.emplace_back(i, j);
    Poset P(n, rel);
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) exps[i] = ed(rng);
    MLaurent f = MLaurent::monomial(n, exps, QRat(1));
    int r = rd(rng);
    QRat via_simplex = qint_order_polytope(f, P, natural_labeling(n),
                                           Bound::qpow(r), Bound::one());
    QRat via_sum = qint_order_polytope_sum(f, P, natural_labeling(n),
                                           std::vector<int>(n, r),
                                           std::vector<int>(n, 0));
    CHECK(via_simplex == via_sum);
  }
}

TEST_CASE("scaled-domain finite sum") {
  // n=1, f=1, q^3 <= x <= 1: (1-q)(1+q+q^2)
  QDomain D1;
  D1.n = 1;
  D1.r = {3};
  D1.s = {0};
  D1.order = {0};
  MLaurent one1 = MLaurent::constant(1, QRat(1));
  CHECK(qsum_domain(one1, D1) == one_minus_q() * QRat(q_number(3)));
  // empty window
  QDomain D0 = D1;
  D0.r = {0};
  CHECK(qsum_domain(one1, D0).is_zero());
  // n=2 chain with t=0, window [q^2, 1], order (x1 then x2): matches simplex
  QDomain D2;
  D2.n = 2;
  D2.r = {2, 2};
  D2.s = {0, 0};
  D2.rels = {{0, 1, 0}};  // x1 <= x2
  D2.order = {0, 1};
  MLaurent one2 = MLaurent::constant(2, QRat(1));
  QRat sum2 = qsum_domain(one2, D2);
  CHECK(sum2 ==
        qint_simplex(one2, {0, 1}, Bound::qpow(2), Bound::one(), {0, 1}));
  // hand enumeration of the weak/strict split at n=2: with order (x2, x1)
  // the relation x1 <= x2 must hold strictly on exponents (k1 > k2).
  QDomain D2s = D2;
  D2s.order = {1, 0};
  QRat expect(0L);
  for (int k1 = 0; k1 < 2; ++k1)
    for (int k2 = 0; k2 < 2; ++k2)
      if (k1 > k2) expect += QRat::q_power(k1 + k2);
  expect *= one_minus_q().pow(2);
  CHECK(qsum_domain(one2, D2s) == expect);
  CHECK(qsum_domain(one2, D2s) ==
        qint_simplex(one2, {0, 1}, Bound::qpow(2), Bound::one(), {1, 0}));
}

TEST_CASE("order interchange transform") {
  QDomain D;
  D.n = 2;
  D.r = {3, 3};
  D.s = {0, 0};
  D.rels = {{0, 1, 0}};
  D.order = {0, 1};
  // same order: unchanged
  QDomain same = change_order(D, {0, 1});
  CHECK(same.rels[0].t == 0);
  // reversing: x1 before x2 becomes after, so t increases by 1
  QDomain rev = change_order(D, {1, 0});
  CHECK(rev.rels[0].t == 1);
  // round trip restores t
  QDomain back = change_order(rev, {0, 1});
  CHECK(back.rels[0].t == 0);
  // value preservation on random data
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ed(0, 2), td(-1, 1), cd(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 2;
    QDomain E;
    E.n = n;
    E.r.assign(n, 3);
    E.s.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) E.rels.push_back({i, j, td(rng)});
    E.order.resize(n);
    for (int i = 0; i < n; ++i) E.order[i] = i;
    std::shuffle(E.order.begin(), E.order.end(), rng);
    std::vector<int> order2 = E.order;
    std::shuffle(order2.begin(), order2.end(), rng);
    MLaurent f(n);
    for (int terms = 0; terms < 3; ++terms) {
      std::vector<int> e(n);
      for (int i = 0; i < n; ++i) e[i] = ed(rng);
      f.add_term(e, QRat(static_cast<long>(cd(rng))));
    }
    QDomain E2 = change_order(E, order2);
    CHECK(qsum_domain(f, E) == qsum_domain(f, E2));
  }
}

TEST_CASE("symmetric vanishing integrand is chain independent") {
  int n = 3;
  MLaurent e1 = MLaurent::var(n, 1) + MLaurent::var(n, 2) + MLaurent::var(n, 3);
  MLaurent d = vandermonde_bar(n);
  MLaurent f = d * d * e1;  // symmetric, vanishes whenever x_i = x_j
  std::vector<int> pi = {0, 1, 2};
  QRat base = qint_simplex(f, pi, Bound::zero(), Bound::one());
  while (std::next_permutation(pi.begin(), pi.end())) {
    CHECK(qint_simplex(f, pi, Bound::zero(), Bound::one()) == base);
  }
}
