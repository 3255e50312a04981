#include "qvol/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "qvol/qint.hpp"

namespace qvol {

namespace {

long choose2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }
long choose3(long n) { return n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0; }

QRat qq_poch(int k) { return QRat(q_pochhammer_qpow(1, k)); }  // (q;q)_k

QRat one_minus_q() { return qq_poch(1); }

/// s_lambda(1, q, ..., q^{n-1}).
QRat principal_spec(const Partition& lambda, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i;
  return schur(lambda, n).substitute_qpowers(e);
}

std::vector<int> shifted_exps(const Partition& mu, int n) {
  std::vector<int> e(n);
  for (int i = 1; i <= n; ++i) e[i - 1] = mu.part(i) + n - i;
  return e;
}

}  // namespace

RPPShape RPPShape::normal(const Partition& nu) {
  RPPShape s;
  for (int i = 1; i <= nu.length(); ++i) {
    s.row_start.push_back(1);
    s.row_len.push_back(nu.part(i));
  }
  return s;
}

RPPShape RPPShape::shifted_staircase(int n, const Partition& lambda) {
  if (lambda.length() > n)
    throw arithmetic_error("shifted_staircase: too many parts");
  RPPShape s;
  for (int i = 1; i <= n; ++i) {
    s.row_start.push_back(i);
    s.row_len.push_back(n + lambda.part(i) - i + 1);
  }
  return s;
}

long RPPShape::cell_count() const {
  return std::accumulate(row_len.begin(), row_len.end(), 0L);
}

std::vector<int> RPPShape::diagonal_rows() const {
  std::vector<int> out;
  for (int d = 1; d <= rows(); ++d)
    if (has_cell(d, d)) out.push_back(d);
  return out;
}

Partition square_with_arms(int n, const Partition& lambda,
                           const Partition& mu) {
  if (lambda.length() > n || mu.length() > n)
    throw arithmetic_error("square_with_arms: too many parts");
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(n + lambda.part(i));
  Partition mt = mu.transpose();
  for (int j = 1; j <= mt.length(); ++j) parts.push_back(mt.part(j));
  return Partition(std::move(parts));
}

int durfee_size(const Partition& nu) {
  int d = 0;
  while (nu.part(d + 1) >= d + 1) ++d;
  return d;
}

long rpp_size(const RPPGrid& grid) {
  long s = 0;
  for (const auto& row : grid)
    for (int v : row) s += v;
  return s;
}

long rpp_trace(const RPPShape& shape, const RPPGrid& grid) {
  long s = 0;
  for (int d : shape.diagonal_rows())
    s += grid[d - 1][d - shape.row_start[d - 1]];
  return s;
}

std::vector<int> rpp_rdiag(const RPPShape& shape, const RPPGrid& grid) {
  std::vector<int> out;
  std::vector<int> dr = shape.diagonal_rows();
  for (auto it = dr.rbegin(); it != dr.rend(); ++it)
    out.push_back(grid[*it - 1][*it - shape.row_start[*it - 1]]);
  return out;
}

long enumerate_rpp(const RPPShape& shape, int max_entry,
                   const std::vector<int>* rdiag,
                   const std::function<void(const RPPGrid&)>& visit,
                   long max_count, long max_size) {
  const int R = shape.rows();
  std::vector<int> dr = shape.diagonal_rows();
  std::vector<long> forced_at(R + 1, -1);  // forced value of cell (d,d)
  if (rdiag) {
    if (static_cast<int>(rdiag->size()) != static_cast<int>(dr.size()))
      throw arithmetic_error("enumerate_rpp: rdiag length mismatch");
    for (size_t k = 0; k < dr.size(); ++k)
      forced_at[dr[dr.size() - 1 - k]] = (*rdiag)[k];
  }
  // Per-column cap: if the bottom cell of a contiguous column is forced,
  // every entry in the column is at most that value.
  int maxc = 0;
  for (int r = 1; r <= R; ++r)
    maxc = std::max(maxc, shape.row_start[r - 1] + shape.row_len[r - 1] - 1);
  std::vector<long> col_cap(maxc + 1, -1);
  for (int c = 1; c <= maxc; ++c) {
    int top = 0, bot = 0;
    bool contiguous = true;
    for (int r = 1; r <= R; ++r) {
      if (shape.has_cell(r, c)) {
        if (top == 0) top = r;
        if (bot != 0 && bot != r - 1) contiguous = false;
        bot = r;
      }
    }
    if (contiguous && bot == c && forced_at[c] >= 0 && shape.has_cell(c, c))
      col_cap[c] = forced_at[c];
  }

  RPPGrid grid(R);
  for (int r = 1; r <= R; ++r) grid[r - 1].assign(shape.row_len[r - 1], 0);
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 1; r <= R; ++r)
    for (int c = shape.row_start[r - 1];
         c < shape.row_start[r - 1] + shape.row_len[r - 1]; ++c)
      cells.push_back({r, c});

  long count = 0;
  std::function<void(size_t, long)> rec = [&](size_t idx, long sum) {
    if (idx == cells.size()) {
      if (++count > max_count) throw cap_exceeded("enumerate_rpp: cap");
      visit(grid);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 0;
    if (shape.has_cell(r, c - 1))
      lo = std::max(lo, grid[r - 1][c - 1 - shape.row_start[r - 1]]);
    if (shape.has_cell(r - 1, c))
      lo = std::max(lo, grid[r - 2][c - shape.row_start[r - 2]]);
    long hi = max_entry;
    if (col_cap[c] >= 0) hi = std::min(hi, col_cap[c]);
    if (max_size >= 0) hi = std::min(hi, max_size - sum);
    if (r == c && forced_at[r] >= 0) {
      long v = forced_at[r];
      if (v < lo || v > hi) return;
      grid[r - 1][c - shape.row_start[r - 1]] = static_cast<int>(v);
      rec(idx + 1, sum + v);
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      grid[r - 1][c - shape.row_start[r - 1]] = static_cast<int>(v);
      rec(idx + 1, sum + v);
    }
  };
  rec(0, 0);
  return count;
}

QRat gf_rpp_fixed_rdiag(int n, const Partition& lambda, const Partition& mu) {
  if (lambda.length() > n || mu.length() > n)
    throw arithmetic_error("gf_rpp_fixed_rdiag: too many parts");
  long b1 = 0;  // b of the staircase (n,...,1,0) plus lambda
  for (int i = 1; i <= n; ++i) b1 += (long)(i - 1) * (n + 1 - i + lambda.part(i));
  std::vector<int> e = shifted_exps(mu, n);
  long esum = std::accumulate(e.begin(), e.end(), 0L);
  QRat val = QRat::q_power(static_cast<int>(esum - b1)) *
             (schur(lambda, n) * vandermonde_bar(n)).substitute_qpowers(e);
  for (int j = 1; j <= n; ++j)
    val /= qq_poch(lambda.part(j) + n - j);
  return val;
}

bool is_gt_pattern(int n, const Partition& lambda, const Partition& mu,
                   const std::vector<std::vector<int>>& x) {
  if (static_cast<int>(x.size()) != n) return false;
  auto imin = [&](int j) { return 1 - lambda.part(j); };
  auto imax = [&](int j) { return n + 1 - j; };
  auto in_dom = [&](int i, int j) {
    return j >= 1 && j <= n && i >= imin(j) && i <= imax(j);
  };
  auto get = [&](int i, int j) { return x[j - 1][i - imin(j)]; };
  for (int j = 1; j <= n; ++j)
    if (static_cast<int>(x[j - 1].size()) != imax(j) - imin(j) + 1)
      return false;
  for (int j = 1; j <= n; ++j)
    for (int i = imin(j); i <= imax(j); ++i) {
      int v = get(i, j);
      if (v < 0) return false;
      if (in_dom(i, j + 1) && get(i, j + 1) < v) return false;
      if (in_dom(i + 1, j) && v < get(i + 1, j)) return false;
    }
  for (int i = 1; i <= n; ++i)
    if (get(i, n + 1 - i) != mu.part(i)) return false;
  return true;
}

long enumerate_gt(int n, const Partition& lambda, const Partition& mu,
                  int max_entry,
                  const std::function<void(const std::vector<std::vector<int>>&)>&
                      visit,
                  long max_count) {
  auto imin = [&](int j) { return 1 - lambda.part(j); };
  auto imax = [&](int j) { return n + 1 - j; };
  std::vector<std::vector<int>> x(n);
  for (int j = 1; j <= n; ++j) x[j - 1].assign(imax(j) - imin(j) + 1, 0);
  auto get = [&](int i, int j) -> int& { return x[j - 1][i - imin(j)]; };
  auto in_dom = [&](int i, int j) {
    return j >= 1 && j <= n && i >= imin(j) && i <= imax(j);
  };
  long count = 0;
  // Rows j = n down to 1; within a row, i from imax(j) down to imin(j).
  std::function<void(int, int)> rec = [&](int j, int i) {
    if (j == 0) {
      if (++count > max_count) throw cap_exceeded("enumerate_gt: cap");
      visit(x);
      return;
    }
    if (i < imin(j)) {
      rec(j - 1, imax(j - 1));
      return;
    }
    int lo = 0, hi = max_entry;
    if (in_dom(i + 1, j)) lo = std::max(lo, get(i + 1, j));
    if (in_dom(i, j + 1)) hi = std::min(hi, get(i, j + 1));
    if (i == imax(j)) {
      int v = mu.part(n + 1 - j);
      if (v < lo || v > hi) return;
      get(i, j) = v;
      rec(j, i - 1);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      get(i, j) = v;
      rec(j, i - 1);
    }
  };
  rec(n, imax(n));
  return count;
}

QRat gf_gt(int n, const Partition& lambda, const Partition& mu) {
  std::vector<int> e = shifted_exps(mu, n);
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
  long bl = 0;  // b(staircase_n + lambda)
  for (int i = 1; i <= n; ++i) bl += (long)(i - 1) * (n - i + lambda.part(i));
  QRat form2 = QRat::q_power(static_cast<int>(mu.size() - bl)) *
               (schur(lambda, n) * vandermonde_bar(n)).substitute_qpowers(e);
  for (int j = 1; j <= n; ++j)
    form2 /= qq_poch(lambda.part(j) + n - j);

  QRat form1 = QRat::q_power(static_cast<int>(mu.size() - lambda.b_stat())) *
               schur(mu, n).substitute_qpowers(d) *
               schur(lambda, n).substitute_qpowers(e);
  for (int j = 1; j <= n; ++j)
    form1 *= qq_poch(n - j) / qq_poch(lambda.part(j) + n - j);

  if (form1 != form2) throw arithmetic_error("gf_gt: forms disagree");
  return form2;
}

QRat wt_abm(const RPPShape& shape, const RPPGrid& grid, int a, int b, int m) {
  if (m < 1) throw arithmetic_error("wt_abm: m must be >= 1");
  std::vector<int> mu = rpp_rdiag(shape, grid);
  const int n = static_cast<int>(mu.size());
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = mu[i] + n - 1 - i;
  QRat w = QRat::q_power(
      static_cast<int>(rpp_size(grid) + (long)a * rpp_trace(shape, grid)));
  for (int i = 0; i < n; ++i)
    w *= q_pochhammer_scalar(QRat::q_power(v[i] + 1), b);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      w *= QRat::q_power((2 * m - 1) * v[j]) *
           q_pochhammer_scalar(QRat::q_power(1 - m + v[i] - v[j]), 2 * m - 1);
      w /= QRat::q_power(v[j]) - QRat::q_power(v[i]);
    }
  return w;
}

QRat gf_square_weighted(int n, int a, int b, int m) {
  if (a < 0 || b < 0 || m < 1)
    throw arithmetic_error("gf_square_weighted: bad parameters");
  long e = (1 - a + m + (long)a * m) * choose2(n) - 2 * choose3(n + 1) +
           2L * m * m * choose3(n);
  QRat val = QRat::q_power(static_cast<int>(e)) /
             one_minus_q().pow(n * n);
  for (int j = 1; j <= n; ++j) {
    val *= QRat(q_factorial(a + (j - 1) * m)) *
           QRat(q_factorial(b + (j - 1) * m)) * QRat(q_factorial(j * m - 1));
    val /= QRat(q_factorial(a + b + (n + j - 2) * m + 1)) *
           QRat(q_factorial(m - 1)) * QRat(q_factorial(j - 1)).pow(2);
  }
  return val;
}

QRat gf_square_weighted_integral(int n, int a, int b, int m) {
  QRat val = QRat::q_power(static_cast<int>((-1 - a) * choose2(n) -
                                            2 * choose3(n))) /
             one_minus_q().pow(n);
  for (int j = 1; j <= n - 1; ++j) val /= qq_poch(j).pow(2);
  return val * selberg_direct(n, a, b, m);
}

QRat gf_trace_nu(const Partition& nu, int a) {
  Partition nt = nu.transpose();
  int d = durfee_size(nu);
  QRat val(1);
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = 1; j <= nu.part(i); ++j) {
      int hook = nu.part(i) - j + nt.part(j) - i + 1;
      int chi = (i <= d && j <= d) ? 1 : 0;
      val /= QRat(1) - QRat::q_power(a * chi + hook);
    }
  return val;
}

QRat gf_shifted_trace(int n, const Partition& lambda, int a) {
  QRat val = QRat::q_power(static_cast<int>(-lambda.b_stat())) *
             principal_spec(lambda, n);
  for (int j = 1; j <= n; ++j)
    val *= qq_poch(j - 1) / qq_poch(lambda.part(j) + n - j);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      // the trace variable appears squared for columns j < n: the shifted
      // hook of the corresponding cell wraps through two diagonal cells
      int xe = (j < n) ? 2 : 1;
      val /= QRat(1) - QRat::q_power(a * xe + 1 + 2 * n - i - j +
                                     lambda.part(i) + lambda.part(j + 1));
    }
  return val;
}

namespace {

MLaurent power_product(int n, int e) {
  return MLaurent::monomial(n, std::vector<int>(n, e), QRat(1));
}

std::vector<int> natural_chain(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

}  // namespace

TransformCheck warnaar_integral(int n, const Partition& lambda,
                                const Partition& mu, int alpha) {
  MLaurent vb = vandermonde_bar(n);
  MLaurent f = schur(lambda, n) * schur(mu, n) * power_product(n, alpha - 1) *
               vb * vb;
  QRat lhs = qint_simplex(f, natural_chain(n), Bound::zero(), Bound::one());
  QRat rhs = one_minus_q().pow(n) *
             QRat::q_power(static_cast<int>(alpha * choose2(n) +
                                            2 * choose3(n))) *
             principal_spec(lambda, n) * principal_spec(mu, n);
  for (int i = 1; i <= n - 1; ++i) rhs *= qq_poch(i).pow(2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rhs /= QRat(1) - QRat::q_power(alpha + 2 * n - i - j + lambda.part(i) +
                                     mu.part(j));
  return {lhs, rhs};
}

TransformCheck gansner_integral(int n, const Partition& lambda, int alpha) {
  MLaurent f =
      schur(lambda, n) * power_product(n, alpha - 1) * vandermonde_bar(n);
  QRat lhs = qint_simplex(f, natural_chain(n), Bound::zero(), Bound::one());
  QRat rhs =
      one_minus_q().pow(n) *
      QRat::q_power(static_cast<int>(alpha * choose2(n) + choose3(n))) *
      principal_spec(lambda, n);
  for (int i = 1; i <= n - 1; ++i) rhs *= qq_poch(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      int xe = (j < n) ? 2 : 1;
      rhs /= QRat(1) - QRat::q_power((alpha - 1) * xe + 1 + 2 * n - i - j +
                                     lambda.part(i) + lambda.part(j + 1));
    }
  return {lhs, rhs};
}

QRat partition_sum(const MLaurent& f, int n, int cutoff) {
  QRat acc(0);
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int maxpart, int remaining) {
    {
      Partition mu(parts);
      std::vector<int> e = shifted_exps(mu, n);
      long esum = std::accumulate(e.begin(), e.end(), 0L);
      acc += QRat::q_power(static_cast<int>(esum)) * f.substitute_qpowers(e);
    }
    if (static_cast<int>(parts.size()) == n) return;
    for (int p = 1; p <= std::min(maxpart, remaining); ++p) {
      parts.push_back(p);
      rec(p, remaining - p);
      parts.pop_back();
    }
  };
  rec(cutoff, cutoff);
  return acc;
}

}  // namespace qvol
