#pragma once

#include <gmpxx.h>

#include "qvol/constructions.hpp"

namespace qvol {

/// Integrand of the q-Selberg integral with alpha = r+1, beta = s+1:
/// prod_i x_i^r (q x_i;q)_s times, for each pair i < j, the factor
/// x_j^m (q^{1-m} x_i/x_j;q)_m x_j^m (x_i/x_j;q)_m, which equals
/// x_j^{2m-1} (q^{1-m} x_i/x_j;q)_{2m-1} (x_j - x_i) when m >= 1 and 1
/// when m = 0. Fully expanded; all exponents are nonnegative.
MLaurent selberg_integrand(int n, int r, int s, int m);

/// The integral of the above over 0 <= x_1 <= ... <= x_n <= 1 with order
/// d_qx_1 ... d_qx_n.
QRat selberg_direct(int n, int r, int s, int m);

/// Product formula q^{alpha m C(n,2) + 2 m^2 C(n,3)} prod_j
/// GammaQ(alpha+(j-1)m) GammaQ(beta+(j-1)m) GammaQ(jm) /
/// (GammaQ(alpha+beta+(n+j-2)m) GammaQ(m)) for integers alpha, beta >= 1
/// and m >= 1.
QRat selberg_closed_form(int n, int alpha, int beta, int m);

/// The same integral computed from the maj generating function of the
/// associated poset: prefactor / [N]! * sum q^{maj} over linear extensions.
QRat selberg_via_poset(int n, int r, int s, int m,
                       long max_extensions = 10000000L);

/// Closed form for sum q^{maj} over linear extensions of that poset.
QRat selberg_maj_closed(int n, int r, int s, int m);

/// Cube-form identity: integral over [0,1]^n of
/// prod_i x_i^{alpha-1} (q x_i;q)_{beta-1} prod_{i<j} x_j^{2m}
/// (q^{1-m} x_i/x_j;q)_{2m} equals q^{alpha m C(n,2)+2 m^2 C(n,3)} prod_j
/// GammaQ(alpha+(j-1)m) GammaQ(beta+(j-1)m) GammaQ(1+jm) /
/// (GammaQ(alpha+beta+(n+j-2)m) GammaQ(1+m)). Returns both sides.
struct CubeCheck {
  QRat lhs, rhs;
  bool equal() const { return lhs == rhs; }
};
CubeCheck selberg_cube_form(int n, int alpha, int beta, int m);

/// The classical value: the closed form with every q-integer [k] replaced
/// by k (so q-factorials become factorials and q-powers become 1).
mpq_class selberg_closed_form_classical(int n, int alpha, int beta, int m);

/// Independent classical evaluation (1/n!) prod_j Gamma(alpha+(j-1)m)
/// Gamma(beta+(j-1)m) Gamma(1+jm) / (Gamma(alpha+beta+(n+j-2)m)
/// Gamma(1+m)).
mpq_class selberg_classical_reference(int n, int alpha, int beta, int m);

}  // namespace qvol
