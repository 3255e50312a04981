#include "qvol/constructions.hpp"

#include <bit>

namespace qvol {

namespace {

std::vector<std::pair<int, int>> relation_pairs(const Poset& P) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < P.size(); ++i) {
    for (int j = 0; j < P.size(); ++j) {
      if (P.less(i, j)) rels.emplace_back(i, j);
    }
  }
  return rels;
}

std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

bool is_forest(const Poset& P) {
  std::vector<int> covers_above(P.size(), 0);
  for (auto [i, j] : P.cover_relations()) {
    (void)j;
    if (++covers_above[i] > 1) return false;
  }
  return true;
}

std::vector<int> forest_hooks(const Poset& P) {
  std::vector<int> h(P.size());
  for (int i = 0; i < P.size(); ++i) {
    h[i] = 1 + std::popcount(P.below_mask(i));
  }
  return h;
}

Poset attach_leaves(const Poset& F, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != F.size()) {
    throw arithmetic_error("attach_leaves: sequence length mismatch");
  }
  auto rels = relation_pairs(F);
  int next = F.size();
  for (int i = 0; i < F.size(); ++i) {
    for (int c = 0; c < a[i]; ++c) rels.emplace_back(next++, i);
  }
  return Poset(next, rels);
}

SelbergPosetData build_selberg_poset(int n, int r, int s, int m) {
  if (n < 1 || r < 0 || s < 0 || m < 0 || (n > 1 && m < 1)) {
    throw arithmetic_error("build_selberg_poset: bad parameters");
  }
  // element ids are positions in the labeling word
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<int>>> w_up(n + 1), w_down(n + 1);
  for (int i = 1; i <= n; ++i) {
    w_up[i].assign(n + 1, {});
    w_down[i].assign(n + 1, {});
  }
  auto fresh = [&](const std::string& name) {
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= m; ++k) {
        w_up[i][j].push_back(fresh("w" + std::to_string(i) + "," +
                                   std::to_string(j) + "_" +
                                   std::to_string(k)));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= m; ++k) {
        w_down[j][i].push_back(fresh("w" + std::to_string(j) + "," +
                                     std::to_string(i) + "_" +
                                     std::to_string(k)));
      }
    }
  }
  std::vector<std::vector<int>> y(n + 1), z(n + 1);
  std::vector<int> x(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int a = 1; a <= r; ++a) {
      y[i].push_back(
          fresh("y" + std::to_string(i) + "_" + std::to_string(a)));
    }
  }
  for (int i = 1; i <= n; ++i) x[i] = fresh("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    for (int b = 1; b <= s; ++b) {
      z[i].push_back(
          fresh("z" + std::to_string(i) + "_" + std::to_string(b)));
    }
  }
  int N = static_cast<int>(names.size());
  std::vector<std::pair<int, int>> rels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      rels.emplace_back(x[i], w_up[i][j][0]);
      for (int k = 0; k + 1 < m; ++k) {
        rels.emplace_back(w_up[i][j][k], w_up[i][j][k + 1]);
      }
      rels.emplace_back(w_up[i][j][m - 1], x[j]);
      rels.emplace_back(x[i], w_down[j][i][m - 1]);
      for (int k = 0; k + 1 < m; ++k) {
        rels.emplace_back(w_down[j][i][k + 1], w_down[j][i][k]);
      }
      rels.emplace_back(w_down[j][i][0], x[j]);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int a = 0; a + 1 < r; ++a) rels.emplace_back(y[i][a], y[i][a + 1]);
    if (r > 0) rels.emplace_back(y[i][r - 1], x[i]);
    if (s > 0) rels.emplace_back(x[i], z[i][0]);
    for (int b = 0; b + 1 < s; ++b) rels.emplace_back(z[i][b], z[i][b + 1]);
  }
  SelbergPosetData out{n, r, s, m, Poset(N, rels), {}, std::move(names)};
  out.omega.resize(N);
  for (int e = 0; e < N; ++e) out.omega[e] = e + 1;
  return out;
}

SchurPosetData build_schur_poset(int n, const Partition& lambda,
                                 bool with_zero_diag) {
  if (lambda.length() > n) {
    throw arithmetic_error("build_schur_poset: too many parts");
  }
  int kmax = lambda.part(1) + n - 1;
  std::vector<int> a(kmax + 1, 0);
  for (int k = 0; k <= kmax; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (i + k <= n + lambda.part(i)) ++a[k];
    }
  }
  std::vector<SchurCell> cells;
  int kmin = with_zero_diag ? 0 : 1;
  for (int k = kmax; k >= kmin; --k) {
    for (int i = 1; i <= a[k]; ++i) {
      int row = a[k] - i + 1;
      cells.push_back({k, i, row, row + k});
    }
  }
  int N = static_cast<int>(cells.size());
  std::vector<std::pair<int, int>> rels;
  for (int e1 = 0; e1 < N; ++e1) {
    for (int e2 = 0; e2 < N; ++e2) {
      if (e1 == e2) continue;
      // weakly-northwest cells are larger
      if (cells[e2].row <= cells[e1].row && cells[e2].col <= cells[e1].col) {
        rels.emplace_back(e1, e2);
      }
    }
  }
  SchurPosetData out{n,       lambda,          with_zero_diag,
                     Poset(N, rels), {}, std::move(cells),
                     std::move(a)};
  out.omega.resize(N);
  for (int e = 0; e < N; ++e) out.omega[e] = e + 1;
  return out;
}

QRat schur_poset_integral(const SchurPosetData& SP, const Partition& mu) {
  if (SP.with_zero_diag) {
    throw arithmetic_error("schur_poset_integral: needs the reduced poset");
  }
  int n = SP.n;
  int N = SP.poset.size();
  int ell = SP.lambda.length();
  auto xval = [&](int j) { return mu.part(j) + n - j; };  // exponent of x_j
  std::vector<Bound> lo(N, Bound::zero()), hi(N, Bound::one());
  for (int e = 0; e < N; ++e) {
    if (SP.cells[e].diag != 1) continue;
    int i = SP.cells[e].index;
    if (ell <= n - 1) {
      lo[e] = Bound::qpow(xval(i));
      hi[e] = Bound::qpow(xval(i + 1));
    } else {
      lo[e] = (i == 1) ? Bound::zero() : Bound::qpow(xval(i - 1));
      hi[e] = Bound::qpow(xval(i));
    }
  }
  std::vector<int> order(N);
  for (int e = 0; e < N; ++e) order[SP.omega[e] - 1] = e;
  return qint_eliminate(MLaurent::constant(N, QRat(1)), SP.poset, lo, hi,
                        order);
}

TransformCheck verify_chain_below(const Poset& P, int t, int m,
                                  const MLaurent& f) {
  int n = P.size();
  std::vector<int> e(n, 0);
  e[t] = m;
  MLaurent lhs_f = f * MLaurent::monomial(n, e, QRat(1));
  QRat lhs =
      qint_order_polytope(lhs_f, P, natural_labeling(n), Bound::zero(),
                          Bound::one());
  auto rels = relation_pairs(P);
  for (int j = 1; j + 1 <= m; ++j) rels.emplace_back(n + j - 1, n + j);
  rels.emplace_back(n + m - 1, t);
  Poset Q(n + m, rels);
  std::vector<int> omega(n + m);
  for (int j = 1; j <= m; ++j) omega[n + j - 1] = j;
  for (int i = 0; i < n; ++i) omega[i] = m + i + 1;
  MLaurent f_ext = embed_vars(f, identity_map(n), n + m);
  QRat rhs = QRat(q_factorial(m)) * qint_order_polytope(f_ext, Q, omega,
                                                        Bound::zero(),
                                                        Bound::one());
  return {lhs, rhs};
}

TransformCheck verify_chain_above(const Poset& P, int s, int m,
                                  const MLaurent& f) {
  int n = P.size();
  MLaurent lhs_f = f * pochhammer_var(n, QRat::q_power(1), s + 1, m);
  QRat lhs =
      qint_order_polytope(lhs_f, P, natural_labeling(n), Bound::zero(),
                          Bound::one());
  auto rels = relation_pairs(P);
  rels.emplace_back(s, n);
  for (int j = 1; j + 1 <= m; ++j) rels.emplace_back(n + j - 1, n + j);
  Poset Q(n + m, rels);
  std::vector<int> omega(n + m);
  for (int i = 0; i < n; ++i) omega[i] = i + 1;
  for (int j = 1; j <= m; ++j) omega[n + j - 1] = n + j;
  MLaurent f_ext = embed_vars(f, identity_map(n), n + m);
  QRat rhs = QRat(q_factorial(m)) * qint_order_polytope(f_ext, Q, omega,
                                                        Bound::zero(),
                                                        Bound::one());
  return {lhs, rhs};
}

TransformCheck verify_attach_chain(const Poset& P, int s, int t, int m,
                                   const std::vector<int>& rho,
                                   const MLaurent& f, int variant) {
  int n = P.size();
  if (!P.less(s, t)) {
    throw arithmetic_error("verify_attach_chain: s must be below t");
  }
  if (static_cast<int>(rho.size()) != m || (variant != 1 && variant != 2)) {
    throw arithmetic_error("verify_attach_chain: bad arguments");
  }
  WordStats ws = word_stats(rho);
  int c = (variant == 1 ? -ws.des : 1 - ws.des);
  std::vector<int> e(n, 0);
  e[t] = m;
  MLaurent lhs_f = f * MLaurent::monomial(n, e, QRat(1)) *
                   pochhammer_ratio(n, c, s + 1, t + 1, m) *
                   QRat::q_power(static_cast<int>(ws.maj));
  QRat lhs =
      qint_order_polytope(lhs_f, P, natural_labeling(n), Bound::zero(),
                          Bound::one());
  auto rels = relation_pairs(P);
  rels.emplace_back(s, n + rho[0] - 1);
  for (int j = 1; j < m; ++j) {
    rels.emplace_back(n + rho[j - 1] - 1, n + rho[j] - 1);
  }
  rels.emplace_back(n + rho[m - 1] - 1, t);
  Poset Q(n + m, rels);
  std::vector<int> omega(n + m);
  if (variant == 1) {
    for (int j = 1; j <= m; ++j) omega[n + j - 1] = j;
    for (int i = 0; i < n; ++i) omega[i] = m + i + 1;
  } else {
    for (int i = 0; i <= s; ++i) omega[i] = i + 1;
    for (int j = 1; j <= m; ++j) omega[n + j - 1] = s + 1 + j;
    for (int i = s + 1; i < n; ++i) omega[i] = m + i + 1;
  }
  MLaurent f_ext = embed_vars(f, identity_map(n), n + m);
  QRat rhs = QRat(q_factorial(m)) * qint_order_polytope(f_ext, Q, omega,
                                                        Bound::zero(),
                                                        Bound::one());
  return {lhs, rhs};
}

namespace {

Partition shrink_by_one(const Partition& lambda) {
  std::vector<int> p;
  for (int part : lambda.parts) p.push_back(part - 1);
  return Partition(p);
}

}  // namespace

TransformCheck verify_interlacing(const Poset& P,
                                  const std::vector<int>& ychain,
                                  const Partition& lambda, const MLaurent& f,
                                  int variant) {
  int N = P.size();
  int n = static_cast<int>(ychain.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (!P.less(ychain[i], ychain[i + 1])) {
      throw arithmetic_error("verify_interlacing: not a chain");
    }
  }
  if ((variant == 1 && lambda.length() >= n) ||
      (variant == 2 && lambda.length() != n) || (variant != 1 && variant != 2)) {
    throw arithmetic_error("verify_interlacing: bad variant for partition");
  }
  MLaurent syd = schur(lambda, n) * vandermonde_bar(n);
  MLaurent lhs_f = embed_vars(syd, ychain, N) * f;
  QRat lhs =
      qint_order_polytope(lhs_f, P, natural_labeling(N), Bound::zero(),
                          Bound::one());
  int nz = (variant == 1) ? n - 1 : n;
  auto rels = relation_pairs(P);
  if (variant == 1) {
    for (int i = 0; i < nz; ++i) {
      rels.emplace_back(ychain[i], N + i);
      rels.emplace_back(N + i, ychain[i + 1]);
    }
  } else {
    for (int i = 0; i < nz; ++i) {
      rels.emplace_back(N + i, ychain[i]);
      if (i > 0) rels.emplace_back(ychain[i - 1], N + i);
    }
  }
  Poset Q(N + nz, rels);
  std::vector<int> omega(N + nz);
  for (int i = 0; i < nz; ++i) omega[N + i] = i + 1;
  for (int e = 0; e < N; ++e) omega[e] = nz + e + 1;
  Partition zlambda = (variant == 1) ? lambda : shrink_by_one(lambda);
  MLaurent szd = schur(zlambda, nz) * vandermonde_bar(nz);
  std::vector<int> zmap(nz);
  for (int i = 0; i < nz; ++i) zmap[i] = N + i;
  MLaurent rhs_f =
      embed_vars(szd, zmap, N + nz) * embed_vars(f, identity_map(N), N + nz);
  QRat factor(1L);
  for (int i = 1; i <= nz; ++i) {
    factor *= QRat(q_number(lambda.part(i) + n - i));
  }
  QRat rhs = factor * qint_order_polytope(rhs_f, Q, omega, Bound::zero(),
                                          Bound::one());
  return {lhs, rhs};
}

bool check_schur_interlacing(const Partition& lambda, int n, int variant) {
  int nz = (variant == 1) ? n - 1 : n;
  int tot = nz + n;  // z variables 0..nz-1, y variables nz..nz+n-1
  Partition zlambda = (variant == 1) ? lambda : shrink_by_one(lambda);
  MLaurent g = embed_vars(schur(zlambda, nz) * vandermonde_bar(nz),
                          identity_map(nz), tot);
  for (int i = 0; i < nz; ++i) {
    Bound lo = (variant == 1) ? Bound::var(nz + i)
                              : (i == 0 ? Bound::zero() : Bound::var(nz + i - 1));
    Bound hi = (variant == 1) ? Bound::var(nz + i + 1) : Bound::var(nz + i);
    g = qint_1d(g, i, lo, hi);
  }
  QRat factor(1L);
  for (int i = 1; i <= nz; ++i) {
    factor *= QRat(q_number(lambda.part(i) + n - i));
  }
  std::vector<int> ymap(n);
  for (int i = 0; i < n; ++i) ymap[i] = nz + i;
  MLaurent target =
      embed_vars(schur(lambda, n) * vandermonde_bar(n), ymap, tot);
  return g * factor == target;
}

}  // namespace qvol
