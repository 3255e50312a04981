#include "qvol/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qvol {

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::q_power(int k) {
  if (k < 0) throw arithmetic_error("q_power: negative exponent");
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  std::vector<Int> c(coeffs_);
  for (auto& x : c) x = -x;
  return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw arithmetic_error("division by zero polynomial");
  if (is_zero()) return QPoly();
  if (degree() < d.degree()) throw arithmetic_error("inexact polynomial division");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(degree() - d.degree() + 1, Int(0));
  const Int& lead = d.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int top = rem[k + d.degree()];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw arithmetic_error("inexact polynomial division");
    quot[k] = q;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= q * d.coeffs_[i];
  }
  for (const Int& c : rem)
    if (c != 0) throw arithmetic_error("inexact polynomial division");
  return QPoly(std::move(quot));
}

Int QPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

namespace {
// primitive part with positive leading coefficient
QPoly primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Int g = p.content();
  if (p.leading() < 0) g = -g;
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c.push_back(x / g);
  return QPoly(std::move(c));
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
QPoly pseudo_rem(QPoly a, const QPoly& b) {
  const Int& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Int la = a.leading();
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x *= lb;
    for (int i = 0; i <= b.degree(); ++i) c[shift + i] -= la * b.coeff(i);
    a = QPoly(std::move(c));
  }
  return a;
}
}  // namespace

QPoly QPoly::gcd(const QPoly& a0, const QPoly& b0) {
  QPoly a = primitive(a0), b = primitive(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = primitive(pseudo_rem(a, b));
    a = b;
    b = r;
  }
  return a;
}

Int QPoly::eval_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

Rat QPoly::eval(const Rat& c) const {
  Rat s = 0;
  for (int k = degree(); k >= 0; --k) s = s * c + Rat(coeffs_[k]);
  return s;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << abs_c.get_str();
    } else {
      if (abs_c != 1) os << abs_c.get_str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::string> QPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) out.push_back(c.get_str());
  return out;
}

QPoly q_number(int n) {
  if (n < 0) throw arithmetic_error("q_number: n < 0");
  std::vector<Int> c(n, Int(1));
  return QPoly(std::move(c));
}

QPoly q_factorial(int n) {
  if (n < 0) throw arithmetic_error("q_factorial: n < 0");
  QPoly p(1);
  for (int k = 2; k <= n; ++k) p *= q_number(k);
  return p;
}

QPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  // recurrence over the smaller side keeps intermediate results polynomial
  return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

QPoly q_pochhammer_qpow(int a, int n) {
  if (a < 0 || n < 0) throw arithmetic_error("q_pochhammer_qpow: negative argument");
  QPoly p(1);
  for (int i = 0; i < n; ++i) p *= (QPoly(1) - QPoly::q_power(a + i));
  return p;
}

}  // namespace qvol
