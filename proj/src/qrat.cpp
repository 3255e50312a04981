#include "qvol/qrat.hpp"

namespace qvol {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw arithmetic_error("QRat: zero denominator");
  reduce();
}

void QRat::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  // gcd of primitive parts only; fold in the integer content as well
  Int cn = num_.content(), cd = den_.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  g *= QPoly(cg);
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::q_power(int k) {
  if (k >= 0) return QRat(QPoly::q_power(k));
  return QRat(QPoly(1), QPoly::q_power(-k));
}

const QPoly& QRat::as_polynomial() const {
  if (!den_.is_one()) throw arithmetic_error("QRat: not a polynomial: " + to_string());
  return num_;
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat QRat::operator+(const QRat& o) const {
  if (den_ == o.den_) return QRat(num_ + o.num_, den_);
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
  if (is_zero() || o.is_zero()) return QRat();
  // cross-reduce first to keep intermediate degrees small
  QRat a(num_, o.den_), b(o.num_, den_);
  QRat r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  return r;
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw arithmetic_error("QRat: inverse of zero");
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QRat QRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRat r(1), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat QRat::eval(const Rat& c) const {
  Rat d = den_.eval(c);
  if (d == 0) throw arithmetic_error("QRat: denominator vanishes at evaluation point");
  return num_.eval(c) / d;
}

Rat QRat::eval_one() const { return eval(Rat(1)); }

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

QRat q_pochhammer_scalar(const QRat& a, int n) {
  if (n < 0) throw arithmetic_error("q_pochhammer_scalar: n < 0");
  QRat p(1);
  for (int i = 0; i < n; ++i) p *= (QRat(1) - a * QRat::q_power(i));
  return p;
}

QRat q_gamma_int(int k) {
  if (k < 1) throw arithmetic_error("q_gamma_int: argument must be a positive integer");
  return QRat(q_factorial(k - 1));
}

}  // namespace qvol
