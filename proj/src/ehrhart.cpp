#include "qvol/ehrhart.hpp"

#include <numeric>

namespace qvol {

namespace {

QRat one_minus_q() { return QRat(q_pochhammer_qpow(1, 1)); }

/// sum over linear extensions of q^{maj} * qbinom(m+n-des, n).
QPoly extension_sum(const Poset& P, int m, long max_extensions) {
  const int n = P.size();
  QPoly total;
  for_each_linear_extension(
      P,
      [&](const std::vector<int>& ext) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = ext[i] + 1;
        WordStats st = word_stats(w);
        total += QPoly::q_power(static_cast<int>(st.maj)) *
                 q_binomial(m + n - st.des, n);
      },
      max_extensions);
  return total;
}

}  // namespace

QPoly eq_ehrhart(const Poset& P, int m, long max_extensions) {
  const int n = P.size();
  std::vector<int> lo(n, 0), hi(n, m + 1);
  QPoly dp = ppartition_gf_bounded(P, natural_labeling(n), lo, hi, n * m + 1);
  QPoly ext = extension_sum(P, m, max_extensions);
  if (dp != ext) throw arithmetic_error("eq_ehrhart: routes disagree");
  return dp;
}

QPoly eq_ehrhart_brute(const Poset& P, int m) {
  const int n = P.size();
  QPoly total;
  std::vector<int> x(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      long s = std::accumulate(x.begin(), x.end(), 0L);
      total += QPoly::q_power(static_cast<int>(s));
      return;
    }
    for (x[v] = 0; x[v] <= m; ++x[v]) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (P.less(u, v) && (x[u] < x[v] || (x[u] == x[v] && u > v))) ok = false;
        if (P.less(v, u) && (x[v] < x[u] || (x[v] == x[u] && v > u))) ok = false;
      }
      if (ok) rec(v + 1);
    }
    x[v] = 0;
  };
  rec(0);
  return total;
}

QRat QEhrhartPolynomial::eval(int m) const {
  QRat mq = QRat(q_number(m));
  QRat acc(0), p(1);
  for (const QRat& ck : c) {
    acc += ck * p;
    p *= mq;
  }
  return acc;
}

QRat QEhrhartPolynomial::leading_limit() const {
  const int n = degree();
  QRat acc(0);
  for (int k = 0; k <= n; ++k) acc += c[k] * one_minus_q().pow(n - k);
  return acc;
}

QEhrhartPolynomial fit_ehrhart_polynomial(const Poset& P,
                                          long max_extensions) {
  const int n = P.size();
  // solve sum_k c_k [m]^k = E(m) for m = 0..n
  std::vector<std::vector<QRat>> A(n + 1, std::vector<QRat>(n + 2));
  for (int m = 0; m <= n; ++m) {
    QRat mq = QRat(q_number(m)), p(1);
    for (int k = 0; k <= n; ++k) {
      A[m][k] = p;
      p *= mq;
    }
    A[m][n + 1] = QRat(eq_ehrhart(P, m, max_extensions));
  }
  for (int col = 0; col <= n; ++col) {
    int piv = -1;
    for (int r = col; r <= n; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw arithmetic_error("fit_ehrhart_polynomial: singular");
    std::swap(A[col], A[piv]);
    QRat inv = A[col][col].inverse();
    for (int j = col; j <= n + 1; ++j) A[col][j] *= inv;
    for (int r = 0; r <= n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      QRat f = A[r][col];
      for (int j = col; j <= n + 1; ++j) A[r][j] -= f * A[col][j];
    }
  }
  QEhrhartPolynomial E;
  E.c.resize(n + 1);
  for (int k = 0; k <= n; ++k) E.c[k] = A[k][n + 1];

  for (int m = n + 1; m <= 2 * n; ++m)
    if (E.eval(m) != QRat(eq_ehrhart(P, m, max_extensions)))
      throw arithmetic_error("fit_ehrhart_polynomial: verification failed");
  QRat vol = qint_order_polytope(MLaurent::constant(n, QRat(1)), P,
                                 natural_labeling(n), Bound::zero(),
                                 Bound::one(), max_extensions);
  if (E.leading_limit() != vol)
    throw arithmetic_error("fit_ehrhart_polynomial: leading coefficient");
  return E;
}

EhrhartSeries ehrhart_series(const Poset& P, long max_extensions) {
  const int n = P.size();
  EhrhartSeries S;
  S.n = n;
  S.numerator.assign(n == 0 ? 1 : n, QPoly());
  for_each_linear_extension(
      P,
      [&](const std::vector<int>& ext) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = ext[i] + 1;
        WordStats st = word_stats(w);
        S.numerator[st.des] += QPoly::q_power(static_cast<int>(st.maj));
      },
      max_extensions);
  while (S.numerator.size() > 1 && S.numerator.back().is_zero())
    S.numerator.pop_back();
  return S;
}

std::vector<QPoly> ehrhart_series_expand(const EhrhartSeries& S, int M) {
  // denominator (t;q)_{n+1} = prod_{i=0}^{n} (1 - t q^i) as a t-polynomial
  std::vector<QPoly> den{QPoly(1)};
  for (int i = 0; i <= S.n; ++i) {
    std::vector<QPoly> next(den.size() + 1);
    for (size_t j = 0; j < den.size(); ++j) {
      next[j] += den[j];
      next[j + 1] -= den[j] * QPoly::q_power(i);
    }
    den = std::move(next);
  }
  std::vector<QPoly> out(M + 1);
  for (int m = 0; m <= M; ++m) {
    QPoly v = m < static_cast<int>(S.numerator.size()) ? S.numerator[m]
                                                       : QPoly();
    for (int j = 1; j <= m && j < static_cast<int>(den.size()); ++j)
      v -= den[j] * out[m - j];
    out[m] = v;  // den[0] == 1
  }
  return out;
}

TransformCheck ehrhart_series_integral_check(const Poset& P, int s,
                                             long max_extensions) {
  const int n = P.size();
  EhrhartSeries S = ehrhart_series(P, max_extensions);
  QRat lhs(0);
  for (size_t d = 0; d < S.numerator.size(); ++d)
    lhs += QRat(S.numerator[d]) * QRat::q_power(s * static_cast<int>(d));
  for (int i = 0; i <= n; ++i)
    lhs /= QRat(1) - QRat::q_power(s + i);

  Poset Pp = P.with_minimum_prepended();
  std::vector<int> exps(n + 1, 0);
  exps[0] = s - 1;
  MLaurent f = MLaurent::monomial(n + 1, exps, QRat(1));
  QRat rhs = qint_order_polytope(f, Pp, natural_labeling(n + 1), Bound::zero(),
                                 Bound::one(), max_extensions) /
             one_minus_q().pow(n + 1);
  return {lhs, rhs};
}

}  // namespace qvol
