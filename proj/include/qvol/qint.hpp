#pragma once

#include "qvol/mpoly.hpp"
#include "qvol/poset.hpp"

namespace qvol {

/// An integration endpoint: 0, a power of q, or another variable
/// (0-based index) for nested symbolic integration.
struct Bound {
  enum class Kind { Zero, QPow, Var } kind;
  int value = 0;  // exponent for QPow, variable index for Var

  static Bound zero() { return {Kind::Zero, 0}; }
  static Bound one() { return {Kind::QPow, 0}; }
  static Bound qpow(int k) { return {Kind::QPow, k}; }
  static Bound var(int v) { return {Kind::Var, v}; }
};

/// Jackson integral of f with respect to variable v (0-based) from lo to
/// hi, term by term: x^e integrates to (hi^{e+1} - lo^{e+1}) / [e+1]_q.
/// Throws arithmetic_error on exponent -1, or on 0 raised to a negative
/// power when a bound is zero.
MLaurent qint_1d(const MLaurent& f, int v, Bound lo, Bound hi);

/// Iterated q-integral of f over the truncated simplex
/// a <= x_{chain[0]} <= ... <= x_{chain[n-1]} <= b, integrating the
/// variables in the sequence `order` (order[0] innermost). Both chain and
/// order must be permutations of 0..n-1.
QRat qint_simplex(const MLaurent& f, const std::vector<int>& chain, Bound a,
                  Bound b, const std::vector<int>& order);

/// Like qint_simplex with order d_qx_1 ... d_qx_n (variable 0 innermost).
QRat qint_simplex(const MLaurent& f, const std::vector<int>& chain, Bound a,
                  Bound b);

/// q-integral of f over the truncated order polytope of P inside [a,b]^n,
/// integrating variables in increasing omega-label order, evaluated as the
/// sum over linear extensions of simplex integrals.
QRat qint_order_polytope(const MLaurent& f, const Poset& P,
                         const std::vector<int>& omega, Bound a, Bound b,
                         long max_extensions = 10000000L);

/// Same integral evaluated as the restricted P-partition sum
/// (1-q)^n sum_sigma f(q^sigma) q^{|sigma|} with s_i <= sigma(e_i) < r_i.
QRat qint_order_polytope_sum(const MLaurent& f, const Poset& P,
                             const std::vector<int>& omega,
                             const std::vector<int>& r,
                             const std::vector<int>& s);

/// Iterated q-integral of f over {lo[v] <= x_v <= hi[v]} intersected with
/// {x_i <= x_j : i <_P j}, eliminating variables in the sequence `order`
/// (order[0] innermost). At each step the effective upper bound of the
/// variable being eliminated must resolve uniquely: either there is a
/// unique minimal not-yet-eliminated element above it (whose range is
/// contained in the variable's box, checked via 0/q-power comparisons) and
/// the bound is that variable, or no elements above remain and the bound
/// is the box bound hi[v]; symmetrically below. Throws arithmetic_error if
/// a bound is ambiguous, so that the region is not an iterated box.
QRat qint_eliminate(const MLaurent& f, const Poset& P,
                    const std::vector<Bound>& lo, const std::vector<Bound>& hi,
                    const std::vector<int>& order);

/// Inequality family {q^{r_i} <= x_i <= q^{s_i}} plus scaled relations
/// q^t x_i <= x_j, with an integration order (order[0] innermost).
struct QDomain {
  struct Rel {
    int i, j, t;  // q^t x_i <= x_j, 0-based variables
  };
  int n = 0;
  std::vector<int> r, s;  // r_i >= s_i >= 0
  std::vector<Rel> rels;
  std::vector<int> order;
};

/// Finite-sum evaluation of the iterated q-integral over a QDomain:
/// (1-q)^n sum over lattice exponent vectors k with s_i <= k_i < r_i and
/// t + k_i >= k_j (weak when x_i is integrated before x_j, strict
/// otherwise) of f(q^k) q^{|k|}.
QRat qsum_domain(const MLaurent& f, const QDomain& D);

/// Rewrites D for a new integration order so the integral value is
/// preserved, shifting each relation's t per the interchange rule.
QDomain change_order(const QDomain& D, const std::vector<int>& new_order);

/// The two iterated integrals of f(x, y) over a <= x <= y <= b (x = var 0,
/// y = var 1) differ by (1-q) * int_a^b x f(x,x) d_qx; returns both sides.
struct FubiniDefect {
  QRat difference;       // d_qx d_qy order minus d_qy d_qx order
  QRat single_integral;  // (1-q) int_a^b x f(x,x) d_qx
  bool equal() const { return difference == single_integral; }
};
FubiniDefect fubini_defect(const MLaurent& f, Bound a, Bound b);

}  // namespace qvol
