#include "qvol/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qvol {

void Partition::normalize() {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1])) {
      throw arithmetic_error("Partition: parts must be weakly decreasing and nonnegative");
    }
  }
}

long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

Partition Partition::transpose() const {
  if (parts.empty()) return {};
  std::vector<int> t(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

long Partition::b_stat() const {
  long b = 0;
  for (size_t i = 0; i < parts.size(); ++i) b += static_cast<long>(i) * parts[i];
  return b;
}

Partition Partition::staircase(int n) {
  std::vector<int> p;
  for (int i = n - 1; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

Partition Partition::add(const Partition& a, const Partition& b) {
  std::vector<int> p(std::max(a.parts.size(), b.parts.size()), 0);
  for (size_t i = 0; i < p.size(); ++i) p[i] = a.part(i + 1) + b.part(i + 1);
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

MLaurent MLaurent::constant(int nvars, QRat c) {
  MLaurent r(nvars);
  r.add_term(std::vector<int>(nvars, 0), c);
  return r;
}

MLaurent MLaurent::monomial(int nvars, const std::vector<int>& exps, QRat c) {
  if (static_cast<int>(exps.size()) != nvars) {
    throw arithmetic_error("MLaurent::monomial: exponent vector length mismatch");
  }
  MLaurent r(nvars);
  r.add_term(exps, c);
  return r;
}

MLaurent MLaurent::var(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i - 1) = 1;
  return monomial(nvars, e, QRat(1));
}

void MLaurent::add_term(const std::vector<int>& exps, const QRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MLaurent MLaurent::operator-() const {
  MLaurent r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MLaurent MLaurent::operator+(const MLaurent& o) const {
  if (nvars_ != o.nvars_) throw arithmetic_error("MLaurent: nvars mismatch");
  MLaurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MLaurent MLaurent::operator-(const MLaurent& o) const { return *this + (-o); }

MLaurent MLaurent::operator*(const MLaurent& o) const {
  if (nvars_ != o.nvars_) throw arithmetic_error("MLaurent: nvars mismatch");
  MLaurent r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MLaurent MLaurent::operator*(const QRat& c) const {
  MLaurent r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
  return r;
}

QRat MLaurent::substitute_qpowers(const std::vector<int>& e) const {
  if (static_cast<int>(e.size()) != nvars_) {
    throw arithmetic_error("substitute_qpowers: wrong vector length");
  }
  QRat r(0L);
  for (const auto& [exps, c] : terms_) {
    long k = 0;
    for (int i = 0; i < nvars_; ++i) k += static_cast<long>(exps[i]) * e[i];
    r += c * QRat::q_power(static_cast<int>(k));
  }
  return r;
}

QRat MLaurent::substitute(const std::vector<QRat>& v) const {
  if (static_cast<int>(v.size()) != nvars_) {
    throw arithmetic_error("substitute: wrong vector length");
  }
  QRat r(0L);
  for (const auto& [exps, c] : terms_) {
    QRat t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] != 0) t *= v[i].pow(exps[i]);
    }
    r += t;
  }
  return r;
}

int MLaurent::min_exponent(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int v = e.at(i - 1);
    if (first || v < m) m = v;
    first = false;
  }
  return m;
}

std::string MLaurent::to_string() const {
  if (terms_.empty()) return "0";
  // graded-lex: sort by (total degree, exponent vector)
  std::vector<const std::pair<const std::vector<int>, QRat>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da < db;
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t->second.to_string() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (t->first[i] == 0) continue;
      os << "*x" << i + 1;
      if (t->first[i] != 1) os << "^" << t->first[i];
    }
  }
  return os.str();
}

MLaurent vandermonde_bar(int n) {
  MLaurent r = MLaurent::constant(n, QRat(1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      r *= MLaurent::var(n, j) - MLaurent::var(n, i);
    }
  }
  return r;
}

MLaurent complete_homogeneous(int n, int k) {
  if (k < 0) return MLaurent::zero(n);
  // dp over variables: h_k(x_1..x_m)
  std::vector<MLaurent> h(k + 1, MLaurent::zero(n));
  h[0] = MLaurent::constant(n, QRat(1));
  for (int m = 1; m <= n; ++m) {
    MLaurent xm = MLaurent::var(n, m);
    for (int d = 1; d <= k; ++d) h[d] += h[d - 1] * xm;
    // note: in-place forward update uses updated h[d-1], which already
    // includes powers of x_m — exactly the geometric-sum recursion.
  }
  return h[k];
}

MLaurent schur(const Partition& lambda, int n) {
  int l = lambda.length();
  if (l > n) return MLaurent::zero(n);
  if (l == 0) return MLaurent::constant(n, QRat(1));
  // Jacobi-Trudi: s_lambda = det( h_{lambda_i - i + j} )_{1<=i,j<=l}
  std::vector<std::vector<MLaurent>> H(l, std::vector<MLaurent>(l, MLaurent::zero(n)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      H[i][j] = complete_homogeneous(n, lambda.part(i + 1) - (i + 1) + (j + 1));
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  MLaurent det = MLaurent::zero(n);
  do {
    int inv = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inv;
    MLaurent t = MLaurent::constant(n, QRat(inv % 2 ? -1L : 1L));
    for (int i = 0; i < l; ++i) t *= H[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

MLaurent pochhammer_ratio(int nvars, int c, int i, int j, int m) {
  MLaurent r = MLaurent::constant(nvars, QRat(1));
  for (int t = 0; t < m; ++t) {
    std::vector<int> e(nvars, 0);
    if (i >= 1) e.at(i - 1) += 1;
    e.at(j - 1) -= 1;
    MLaurent f = MLaurent::constant(nvars, QRat(1)) -
                 MLaurent::monomial(nvars, e, QRat::q_power(c + t));
    r *= f;
  }
  return r;
}

MLaurent embed_vars(const MLaurent& f, const std::vector<int>& where,
                    int new_nvars) {
  if (static_cast<int>(where.size()) != f.nvars()) {
    throw arithmetic_error("embed_vars: map length mismatch");
  }
  MLaurent g(new_nvars);
  for (const auto& [exps, c] : f.terms()) {
    std::vector<int> e(new_nvars, 0);
    for (int i = 0; i < f.nvars(); ++i) e.at(where[i]) += exps[i];
    g.add_term(e, c);
  }
  return g;
}

MLaurent pochhammer_var(int nvars, const QRat& a, int i, int m) {
  MLaurent r = MLaurent::constant(nvars, QRat(1));
  for (int t = 0; t < m; ++t) {
    r *= MLaurent::constant(nvars, QRat(1)) -
         MLaurent::var(nvars, i) * (a * QRat::q_power(t));
  }
  return r;
}

}  // namespace qvol
