#pragma once

#include "qvol/constructions.hpp"
#include "qvol/qint.hpp"

namespace qvol {

/// Lattice-point generating function sum q^{x_1+...+x_n} over the integer
/// points of the m-th dilate of the weighted-order region of P: integer
/// vectors in [0,m]^n with x_i >= x_j when i <_P j, strictly when also
/// i > j. Computed both as a bounded partition sum and as
/// sum_pi q^{maj(pi)} qbinom(m+n-des(pi), n) over linear extensions; the
/// two are asserted equal.
QPoly eq_ehrhart(const Poset& P, int m, long max_extensions = 10000000L);

/// Independent brute-force lattice enumeration of the same sum
/// ((m+1)^n points), for cross-checking.
QPoly eq_ehrhart_brute(const Poset& P, int m);

/// E(m) = sum_k c[k] * [m]_q^k.
struct QEhrhartPolynomial {
  std::vector<QRat> c;  // c[k] multiplies [m]_q^k
  QRat eval(int m) const;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  /// lim_{m->inf} E(m)/[m]_q^n for 0 < q < 1. Since [m]_q -> 1/(1-q),
  /// this is sum_k c[k] (1-q)^{n-k}, not the top coefficient alone; it is
  /// the quantity that equals the q-volume of the order polytope.
  QRat leading_limit() const;
};

/// Interpolates the coefficients from m = 0..n, then verifies the fit at
/// m = n+1..2n and checks that leading_limit() equals the q-volume of the
/// order polytope of P (throws arithmetic_error if the verification
/// fails).
QEhrhartPolynomial fit_ehrhart_polynomial(const Poset& P,
                                          long max_extensions = 10000000L);

/// E*(t) = numerator(t) / (t;q)_{n+1} with numerator(t) =
/// sum_pi t^{des(pi)} q^{maj(pi)}; numerator[d] collects the extensions
/// with d descents.
struct EhrhartSeries {
  std::vector<QPoly> numerator;  // index = power of t
  int n = 0;
};
EhrhartSeries ehrhart_series(const Poset& P, long max_extensions = 10000000L);

/// Expansion of numerator(t) / (t;q)_{n+1} through t-order M; the m-th
/// coefficient is a polynomial in q and must equal eq_ehrhart(P, m).
std::vector<QPoly> ehrhart_series_expand(const EhrhartSeries& S, int M);

/// The series at t = q^s versus the q-integral of x_0^{s-1} over the
/// order polytope of P with a new minimum element attached, scaled by
/// (1-q)^{-(n+1)}. Returns both sides.
TransformCheck ehrhart_series_integral_check(const Poset& P, int s,
                                             long max_extensions = 10000000L);

}  // namespace qvol
