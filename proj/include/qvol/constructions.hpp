#pragma once

#include <string>

#include "qvol/mpoly.hpp"
#include "qvol/qint.hpp"

namespace qvol {

/// True if every element is covered by at most one element.
bool is_forest(const Poset& P);

/// Hook lengths h(x) = #{y : y <= x}, including x itself.
std::vector<int> forest_hooks(const Poset& P);

/// Attach a[i] new leaves directly below element i; the new elements are
/// appended after the original ones.
Poset attach_leaves(const Poset& F, const std::vector<int>& a);

/// The chain x_1 < ... < x_n with an r-chain below and an s-chain above
/// each x_i, and two independent m-chains inserted between x_i and x_j for
/// every pair i < j. The labeling lists the increasing w-chains, then the
/// decreasing w-chains, then the y-chains, x_1..x_n, and the z-chains.
struct SelbergPosetData {
  int n, r, s, m;
  Poset poset;
  std::vector<int> omega;           // 1-based label = position in the word
  std::vector<std::string> names;   // per element, for reports
};
SelbergPosetData build_selberg_poset(int n, int r, int s, int m);

/// Poset of cells of the shifted diagram of (n, n-1, ..., 1) + lambda,
/// ordered so that weakly-northwest cells are larger. Cells are indexed by
/// diagonal (col - row) and position within the diagonal, counted from the
/// southeast end. The variant without the 0-diagonal drops the n cells on
/// the main diagonal. The labeling runs over diagonals from the top one
/// down, southeast first within each diagonal.
struct SchurCell {
  int diag, index;  // index is 1-based within the diagonal
  int row, col;     // 1-based matrix coordinates
};
struct SchurPosetData {
  int n;
  Partition lambda;
  bool with_zero_diag;
  Poset poset;
  std::vector<int> omega;        // labels only the diagonals >= 1
  std::vector<SchurCell> cells;  // per element
  std::vector<int> diag_sizes;   // size of diagonal k, k = 0..lambda_1+n-1
};
SchurPosetData build_schur_poset(int n, const Partition& lambda,
                                 bool with_zero_diag);

/// Truncated q-volume of the staircase-cell poset (without the 0-diagonal)
/// where the first-diagonal variables are boxed between consecutive values
/// of x_j = q^{mu_j + n - j}; integrates top diagonal innermost. Multiplied
/// by prod_j [lambda_j + n - j]_q! this equals s_lambda(x) DeltaBar(x) at
/// those x values.
QRat schur_poset_integral(const SchurPosetData& SP, const Partition& mu);

/// A verified rewriting step: both sides of an integral identity.
struct TransformCheck {
  QRat lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

/// int_{O(P)} x_t^m f d_qx = [m]! int_{O(Q)} f d_qy d_qx with an m-chain
/// y_1 <= ... <= y_m attached below element t (0-based), the y's
/// integrated innermost.
TransformCheck verify_chain_below(const Poset& P, int t, int m,
                                  const MLaurent& f);

/// int_{O(P)} (q x_s;q)_m f d_qx = [m]! int_{O(Q)} f d_qx d_qy with an
/// m-chain attached above element s (0-based), the x's integrated first.
TransformCheck verify_chain_above(const Poset& P, int s, int m,
                                  const MLaurent& f);

/// For s <_P t and a permutation rho of {1..m}, attaching the chain
/// x_s <= y_{rho_1} <= ... <= y_{rho_m} <= x_t:
///   variant 1:  int_{O(P)} q^{maj(rho)} x_t^m (q^{-des(rho)} x_s/x_t;q)_m f
///               = [m]! int_{O(Q)} f, order y_1..y_m then x_1..x_n;
///   variant 2:  same with (q^{1-des(rho)} x_s/x_t;q)_m on the left and
///               order x_1..x_{s+1}, y_1..y_m, x_{s+2}..x_n on the right.
TransformCheck verify_attach_chain(const Poset& P, int s, int t, int m,
                                   const std::vector<int>& rho,
                                   const MLaurent& f, int variant);

/// For a chain y_1 < ... < y_n given by 0-based elements of P, interlace a
/// new z-chain and trade s_lambda(y) DeltaBar(y) for the z-version:
///   variant 1 (len(lambda) < n): z has n-1 elements, y_i < z_i < y_{i+1},
///     factor prod_{i<n} [lambda_i+n-i]_q, integrand s_lambda(z);
///   variant 2 (len(lambda) = n): z has n elements, z_i between y_{i-1}
///     and y_i, factor prod_i [lambda_i+n-i]_q, integrand
///     s_{lambda-(1^n)}(z).
/// The z's are integrated innermost on the right.
TransformCheck verify_interlacing(const Poset& P,
                                  const std::vector<int>& ychain,
                                  const Partition& lambda, const MLaurent& f,
                                  int variant);

/// Symbolic check of the determinant interlacing identity: integrating
/// s_lambda(z) DeltaBar(z) over the interlacing box recovers
/// s_lambda(y) DeltaBar(y) divided by the q-integer product. variant as in
/// verify_interlacing.
bool check_schur_interlacing(const Partition& lambda, int n, int variant);

}  // namespace qvol
