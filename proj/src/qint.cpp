#include "qvol/qint.hpp"

#include <algorithm>

namespace qvol {

namespace {

// [m]_q = (1 - q^m)/(1 - q) as a rational function, valid for any m != 0.
QRat q_number_rat(int m) {
  return (QRat(1) - QRat::q_power(m)) / (QRat(1) - QRat::q_power(1));
}

// x_v^m evaluated at the bound; zero-exponent monomial in v returned with
// the coefficient contribution. m != 0 always.
void add_bound_term(MLaurent& out, const std::vector<int>& base_exps, int v,
                    int m, const QRat& coeff, Bound b, int sign) {
  std::vector<int> e = base_exps;
  e[v] = 0;
  QRat c = coeff * QRat(static_cast<long>(sign));
  switch (b.kind) {
    case Bound::Kind::Zero:
      if (m < 0) throw arithmetic_error("qint_1d: pole at zero bound");
      return;  // 0^m = 0 for m > 0
    case Bound::Kind::QPow:
      out.add_term(e, c * QRat::q_power(b.value * m));
      return;
    case Bound::Kind::Var:
      e[b.value] += m;
      out.add_term(e, c);
      return;
  }
}

}  // namespace

MLaurent qint_1d(const MLaurent& f, int v, Bound lo, Bound hi) {
  MLaurent out(f.nvars());
  for (const auto& [exps, c] : f.terms()) {
    int e = exps[v];
    if (e == -1) {
      throw arithmetic_error("qint_1d: nonintegrable monomial exponent -1");
    }
    int m = e + 1;
    QRat coeff = c / q_number_rat(m);
    add_bound_term(out, exps, v, m, coeff, hi, +1);
    add_bound_term(out, exps, v, m, coeff, lo, -1);
  }
  return out;
}

QRat qint_simplex(const MLaurent& f, const std::vector<int>& chain, Bound a,
                  Bound b, const std::vector<int>& order) {
  int n = f.nvars();
  if (static_cast<int>(chain.size()) != n ||
      static_cast<int>(order.size()) != n) {
    throw arithmetic_error("qint_simplex: chain/order length mismatch");
  }
  std::vector<int> pos(n);  // position of each variable in the chain
  for (int p = 0; p < n; ++p) pos[chain[p]] = p;
  std::vector<bool> remaining(n, true);
  MLaurent g = f;
  for (int v : order) {
    int p = pos[v];
    Bound lo = a, hi = b;
    for (int p2 = p - 1; p2 >= 0; --p2) {
      if (remaining[chain[p2]]) {
        lo = Bound::var(chain[p2]);
        break;
      }
    }
    for (int p2 = p + 1; p2 < n; ++p2) {
      if (remaining[chain[p2]]) {
        hi = Bound::var(chain[p2]);
        break;
      }
    }
    g = qint_1d(g, v, lo, hi);
    remaining[v] = false;
  }
  QRat result(0L);
  for (const auto& [exps, c] : g.terms()) {
    for (int e : exps) {
      if (e != 0) throw arithmetic_error("qint_simplex: variables left over");
    }
    result += c;
  }
  return result;
}

QRat qint_simplex(const MLaurent& f, const std::vector<int>& chain, Bound a,
                  Bound b) {
  std::vector<int> order(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) order[i] = i;
  return qint_simplex(f, chain, a, b, order);
}

QRat qint_order_polytope(const MLaurent& f, const Poset& P,
                         const std::vector<int>& omega, Bound a, Bound b,
                         long max_extensions) {
  int n = P.size();
  if (f.nvars() != n || static_cast<int>(omega.size()) != n) {
    throw arithmetic_error("qint_order_polytope: size mismatch");
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[omega[i] - 1] = i;  // smallest label first
  QRat total(0L);
  for_each_linear_extension(
      P,
      [&](const std::vector<int>& seq) {
        total += qint_simplex(f, seq, a, b, order);
      },
      max_extensions);
  return total;
}

namespace {

// value comparison of bounds that are 0 or q^k with 0 < q < 1
bool bound_value_le(Bound a, Bound b) {
  if (a.kind == Bound::Kind::Var || b.kind == Bound::Kind::Var) {
    throw arithmetic_error("bound_value_le: symbolic bound not comparable");
  }
  if (a.kind == Bound::Kind::Zero) return true;
  if (b.kind == Bound::Kind::Zero) return false;
  return a.value >= b.value;
}

}  // namespace

QRat qint_eliminate(const MLaurent& f, const Poset& P,
                    const std::vector<Bound>& lo, const std::vector<Bound>& hi,
                    const std::vector<int>& order) {
  int n = P.size();
  if (f.nvars() != n || static_cast<int>(lo.size()) != n ||
      static_cast<int>(hi.size()) != n ||
      static_cast<int>(order.size()) != n) {
    throw arithmetic_error("qint_eliminate: size mismatch");
  }
  // per-element range envelopes implied by the box bounds and relations
  std::vector<Bound> env_hi(n), env_lo(n);
  for (int u = 0; u < n; ++u) {
    env_hi[u] = hi[u];
    env_lo[u] = lo[u];
    for (int w = 0; w < n; ++w) {
      if (P.less(u, w) && bound_value_le(hi[w], env_hi[u])) env_hi[u] = hi[w];
      if (P.less(w, u) && bound_value_le(env_lo[u], lo[w])) env_lo[u] = lo[w];
    }
  }
  uint64_t remaining = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  MLaurent g = f;
  for (int v : order) {
    uint64_t above = P.above_mask(v) & remaining;
    uint64_t below = P.below_mask(v) & remaining;
    Bound upper = hi[v], lower = lo[v];
    {
      int u = -1;
      for (int w = 0; w < n; ++w) {
        if (!((above >> w) & 1)) continue;
        if ((P.below_mask(w) & above) != 0) continue;  // not minimal above v
        // skip if x_v <= x_w is already implied by the box bound hi[v]
        if (bound_value_le(hi[v], env_lo[w])) continue;
        if (u != -1) {
          throw arithmetic_error("qint_eliminate: ambiguous upper bound");
        }
        u = w;
      }
      if (u != -1) {
        if (!bound_value_le(env_hi[u], hi[v])) {
          throw arithmetic_error("qint_eliminate: upper bound not dominated");
        }
        upper = Bound::var(u);
      }
    }
    {
      int u = -1;
      for (int w = 0; w < n; ++w) {
        if (!((below >> w) & 1)) continue;
        if ((P.above_mask(w) & below) != 0) continue;  // not maximal below v
        // skip if x_w <= x_v is already implied by the box bound lo[v]
        if (bound_value_le(env_hi[w], lo[v])) continue;
        if (u != -1) {
          throw arithmetic_error("qint_eliminate: ambiguous lower bound");
        }
        u = w;
      }
      if (u != -1) {
        if (!bound_value_le(lo[v], env_lo[u])) {
          throw arithmetic_error("qint_eliminate: lower bound not dominated");
        }
        lower = Bound::var(u);
      }
    }
    g = qint_1d(g, v, lower, upper);
    remaining &= ~(1ULL << v);
  }
  QRat total(0L);
  for (const auto& [exps, c] : g.terms()) {
    for (int e : exps) {
      if (e != 0) throw arithmetic_error("qint_eliminate: variables left over");
    }
    total += c;
  }
  return total;
}

QRat qint_order_polytope_sum(const MLaurent& f, const Poset& P,
                             const std::vector<int>& omega,
                             const std::vector<int>& r,
                             const std::vector<int>& s) {
  int n = P.size();
  if (f.nvars() != n || static_cast<int>(omega.size()) != n ||
      static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n) {
    throw arithmetic_error("qint_order_polytope_sum: size mismatch");
  }
  // Assign sigma values in a linear extension order; predecessors carry
  // larger values (weakly, strictly across label inversions).
  std::vector<int> topo;
  {
    uint64_t placed = 0;
    while (static_cast<int>(topo.size()) < n) {
      for (int i = 0; i < n; ++i) {
        if (!((placed >> i) & 1) && (P.below_mask(i) & ~placed) == 0) {
          topo.push_back(i);
          placed |= uint64_t(1) << i;
        }
      }
    }
  }
  std::vector<int> sigma(n, 0);
  QRat total(0L);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      long sz = 0;
      for (int v : sigma) sz += v;
      total += f.substitute_qpowers(sigma) * QRat::q_power(static_cast<int>(sz));
      return;
    }
    int e = topo[k];
    int ub = r[e] - 1;
    for (int k2 = 0; k2 < k; ++k2) {
      int p = topo[k2];
      if (!P.less(p, e)) continue;
      ub = std::min(ub, sigma[p] - (omega[p] > omega[e] ? 1 : 0));
    }
    for (int v = s[e]; v <= ub; ++v) {
      sigma[e] = v;
      rec(k + 1);
    }
  };
  rec(0);
  QRat one_minus_q = QRat(1) - QRat::q_power(1);
  return total * one_minus_q.pow(n);
}

QRat qsum_domain(const MLaurent& f, const QDomain& D) {
  if (f.nvars() != D.n || static_cast<int>(D.r.size()) != D.n ||
      static_cast<int>(D.s.size()) != D.n ||
      static_cast<int>(D.order.size()) != D.n) {
    throw arithmetic_error("qsum_domain: size mismatch");
  }
  std::vector<int> pos(D.n);
  for (int p = 0; p < D.n; ++p) pos[D.order[p]] = p;
  std::vector<int> k(D.n, 0);
  QRat total(0L);
  std::function<void(int)> rec = [&](int i) {
    if (i == D.n) {
      for (const auto& rel : D.rels) {
        long lhs = rel.t + k[rel.i];
        if (pos[rel.i] < pos[rel.j]) {
          if (!(lhs >= k[rel.j])) return;
        } else {
          if (!(lhs > k[rel.j])) return;
        }
      }
      long sz = 0;
      for (int v : k) sz += v;
      total += f.substitute_qpowers(k) * QRat::q_power(static_cast<int>(sz));
      return;
    }
    for (int v = D.s[i]; v < D.r[i]; ++v) {
      k[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  QRat one_minus_q = QRat(1) - QRat::q_power(1);
  return total * one_minus_q.pow(D.n);
}

QDomain change_order(const QDomain& D, const std::vector<int>& new_order) {
  if (static_cast<int>(new_order.size()) != D.n) {
    throw arithmetic_error("change_order: order length mismatch");
  }
  std::vector<int> pos_old(D.n), pos_new(D.n);
  for (int p = 0; p < D.n; ++p) pos_old[D.order[p]] = p;
  for (int p = 0; p < D.n; ++p) pos_new[new_order[p]] = p;
  QDomain E = D;
  E.order = new_order;
  for (auto& rel : E.rels) {
    bool before_old = pos_old[rel.i] < pos_old[rel.j];
    bool before_new = pos_new[rel.i] < pos_new[rel.j];
    if (!before_old && before_new) rel.t -= 1;
    if (before_old && !before_new) rel.t += 1;
  }
  return E;
}

FubiniDefect fubini_defect(const MLaurent& f, Bound a, Bound b) {
  if (f.nvars() != 2) throw arithmetic_error("fubini_defect: need 2 variables");
  std::vector<int> chain = {0, 1};
  QRat i_xy = qint_simplex(f, chain, a, b, {0, 1});
  QRat i_yx = qint_simplex(f, chain, a, b, {1, 0});
  // x * f(x, x) as a one-variable integrand
  MLaurent g(1);
  for (const auto& [exps, c] : f.terms()) {
    g.add_term({exps[0] + exps[1] + 1}, c);
  }
  MLaurent h = qint_1d(g, 0, a, b);
  QRat single(0L);
  for (const auto& [exps, c] : h.terms()) {
    if (exps[0] != 0) throw arithmetic_error("fubini_defect: leftover variable");
    single += c;
  }
  single *= QRat(1) - QRat::q_power(1);
  return FubiniDefect{i_xy - i_yx, single};
}

}  // namespace qvol
