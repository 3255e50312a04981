#pragma once

#include <functional>
#include <optional>

#include "qvol/selberg.hpp"

namespace qvol {

/// Row-convex diagram for reverse plane partitions: row r (1-based, top to
/// bottom) occupies columns row_start[r-1] .. row_start[r-1]+row_len[r-1]-1.
struct RPPShape {
  std::vector<int> row_start, row_len;

  static RPPShape normal(const Partition& nu);
  /// Shifted diagram of (n, n-1, ..., 1) + lambda: row i occupies columns
  /// i .. n + lambda_i.
  static RPPShape shifted_staircase(int n, const Partition& lambda);

  int rows() const { return static_cast<int>(row_len.size()); }
  bool has_cell(int r, int c) const {
    return r >= 1 && r <= rows() && c >= row_start[r - 1] &&
           c < row_start[r - 1] + row_len[r - 1];
  }
  long cell_count() const;
  /// 1-based row indices d with cell (d,d) present, in increasing order.
  std::vector<int> diagonal_rows() const;
};

/// The partition made from the n x n square by attaching lambda to the
/// right and the transpose of mu at the bottom.
Partition square_with_arms(int n, const Partition& lambda,
                           const Partition& mu);

/// Durfee square side of a partition.
int durfee_size(const Partition& nu);

/// Entry grid for a shape: grid[r-1][c - row_start[r-1]].
using RPPGrid = std::vector<std::vector<int>>;

long rpp_size(const RPPGrid& grid);
long rpp_trace(const RPPShape& shape, const RPPGrid& grid);
/// Diagonal entries read from southeast to northwest (a partition).
std::vector<int> rpp_rdiag(const RPPShape& shape, const RPPGrid& grid);

/// Enumerate fillings with weakly increasing rows and columns and entries
/// in [0, max_entry]; optionally force the diagonal entries to rdiag (read
/// southeast to northwest). When max_size >= 0, only fillings with entry
/// sum at most max_size are visited (branches are pruned by partial sum,
/// so this makes series-coefficient checks finite). Returns the number
/// visited; throws cap_exceeded beyond max_count.
long enumerate_rpp(const RPPShape& shape, int max_entry,
                   const std::vector<int>* rdiag,
                   const std::function<void(const RPPGrid&)>& visit,
                   long max_count = 10000000L, long max_size = -1);

/// Closed form for sum q^{|T|} over reverse plane partitions of the
/// shifted staircase shape with diagonal fixed to mu:
/// q^{-b(delta_{n+1}+lambda)} q^{|mu+delta_n|} s_lambda(q^{mu+delta_n})
/// DeltaBar(q^{mu+delta_n}) / prod_j (q;q)_{lambda_j+n-j}.
QRat gf_rpp_fixed_rdiag(int n, const Partition& lambda, const Partition& mu);

/// Triangular-array membership test: entries x[j-1][i - (1 - lambda_j)]
/// for 1 - lambda_j <= i <= n+1-j, nonnegative, with
/// x_{i,j+1} >= x_{i,j} >= x_{i+1,j} and x_{i,n+1-i} = mu_i.
bool is_gt_pattern(int n, const Partition& lambda, const Partition& mu,
                   const std::vector<std::vector<int>>& x);

/// Enumerate the triangular arrays with entries bounded by max_entry.
long enumerate_gt(int n, const Partition& lambda, const Partition& mu,
                  int max_entry,
                  const std::function<void(const std::vector<std::vector<int>>&)>&
                      visit,
                  long max_count = 10000000L);

/// Size generating function of the triangular arrays; computed in both
/// displayed closed forms (and the diagonal-fixed form above) which are
/// asserted equal.
QRat gf_gt(int n, const Partition& lambda, const Partition& mu);

/// Three-parameter weight on square-shape reverse plane partitions:
/// q^{|T|+a tr(T)} prod_i (q^{v_i+1};q)_b prod_{i<j} (q^{v_j})^{2m-1}
/// (q^{1-m+v_i-v_j};q)_{2m-1} / (q^{v_j}-q^{v_i}) with v_i from the
/// diagonal.
QRat wt_abm(const RPPShape& shape, const RPPGrid& grid, int a, int b, int m);

/// Product formula for sum of the above over all square fillings.
QRat gf_square_weighted(int n, int a, int b, int m);
/// The same sum through the ordered-simplex integral route:
/// q^{(-1-a)C(n,2)-2C(n,3)} / ((1-q)^n prod_j (q;q)_j^2) * S(n,a+1,b+1,m).
QRat gf_square_weighted_integral(int n, int a, int b, int m);

/// Hook/Durfee product: sum over fillings of nu of q^{a tr(T)} q^{|T|} =
/// prod_u 1/(1 - q^{a chi(u) + h(u)}) with chi = 1 on the Durfee square.
QRat gf_trace_nu(const Partition& nu, int a);

/// Trace generating function for shifted staircase fillings at x = q^a:
/// q^{-b(lambda)} s_lambda(1..q^{n-1}) prod_j (q;q)_{j-1}/(q;q)_{lambda_j+n-j}
/// prod_{i<=j} 1/(1 - x^{e_j} q^{1+2n-i-j+lambda_i+lambda_{j+1}}) where
/// e_j = 2 for j < n and e_n = 1 (the factor's shifted hook crosses the
/// diagonal twice when row j+1 exists). Verified against enumeration and
/// the simplex-integral route.
QRat gf_shifted_trace(int n, const Partition& lambda, int a);

/// Both sides of the double-Schur integral evaluation:
/// int s_lambda s_mu prod x^{alpha-1} DeltaBar^2 over the ordered simplex
/// = (1-q)^n q^{alpha C(n,2)+2C(n,3)} s_lambda(1..q^{n-1}) s_mu(1..q^{n-1})
///   prod_{i<n} (q;q)_i^2 prod_{i,j} 1/(1-q^{alpha+2n-i-j+lambda_i+mu_j}).
TransformCheck warnaar_integral(int n, const Partition& lambda,
                                const Partition& mu, int alpha);

/// Both sides of the single-DeltaBar variant:
/// int s_lambda prod x^{alpha-1} DeltaBar = (1-q)^n q^{alpha C(n,2)+C(n,3)}
/// s_lambda(1..q^{n-1}) prod_{i<n} (q;q)_i prod_{i<=j}
/// 1/(1-q^{(alpha-1) e_j + 1+2n-i-j+lambda_i+lambda_{j+1}}) with e_j as in
/// gf_shifted_trace (so the exponent is alpha+2n-i-j+... only when j = n
/// or alpha = 1).
TransformCheck gansner_integral(int n, const Partition& lambda, int alpha);

/// Lattice-sum side of the simplex integral: sum over partitions mu with
/// at most n parts and |mu| <= cutoff of q^{|mu+delta_n|} f(q^{mu+delta_n}).
QRat partition_sum(const MLaurent& f, int n, int cutoff);

}  // namespace qvol
