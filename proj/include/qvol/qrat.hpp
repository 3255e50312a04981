#pragma once

#include "qvol/qpoly.hpp"

namespace qvol {

/// Reduced ratio of integer polynomials in q. Canonical form: gcd(num, den)
/// is 1 and den has positive leading coefficient, so operator== is
/// structural equality of rational functions.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}
  QRat(const Int& c) : num_(c), den_(1) {}
  QRat(const Rat& c) : num_(c.get_num()), den_(c.get_den()) {}
  QRat(QPoly num) : num_(std::move(num)), den_(1) {}
  QRat(QPoly num, QPoly den);

  /// q^k for any integer k (negative k gives 1/q^{-k}).
  static QRat q_power(int k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Numerator as QPoly; throws if the denominator is not 1.
  const QPoly& as_polynomial() const;

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  QRat inverse() const;
  QRat pow(int e) const;

  /// Value at q = c for rational c with den(c) != 0.
  Rat eval(const Rat& c) const;

  /// Value at q = 1; throws if the denominator vanishes there.
  Rat eval_one() const;

  std::string to_string() const;

 private:
  void reduce();
  QPoly num_, den_;
};

/// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}) for scalar a.
QRat q_pochhammer_scalar(const QRat& a, int n);

/// Gamma_q(k) = (q;q)_{k-1}/(1-q)^{k-1} = [k-1]_q! for integer k >= 1.
QRat q_gamma_int(int k);

}  // namespace qvol
