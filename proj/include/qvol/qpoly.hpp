#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvol {

using Int = mpz_class;
using Rat = mpq_class;

/// Error thrown when an operation leaves the domain where exact
/// arithmetic is defined (division by zero, inexact division, ...).
struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeff(k) is the coefficient of q^k. The coefficient
/// vector never has trailing zeros, so degree() is exact.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) coeffs_.push_back(Int(c)); }
  explicit QPoly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static QPoly q_power(int k);  // q^k, k >= 0

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[k];
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  /// Exact division; throws arithmetic_error if the division leaves a
  /// remainder or the divisor is zero.
  QPoly divide_exact(const QPoly& d) const;

  /// Content (gcd of coefficients, sign of leading coefficient kept positive).
  Int content() const;

  /// gcd over Z[q], primitive with positive leading coefficient.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  /// Value at q = 1 (sum of coefficients).
  Int eval_one() const;

  /// Value at q = c for a rational c.
  Rat eval(const Rat& c) const;

  /// Canonical text form, e.g. "1 + 2*q + q^3"; "0" for zero.
  std::string to_string() const;

  /// JSON-friendly list of decimal coefficient strings, c0 first.
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// q-combinatorial primitives.

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPoly q_number(int n);
/// [n]_q! = [1]_q ... [n]_q.
QPoly q_factorial(int n);
/// Gaussian binomial; zero when k < 0 or k > n.
QPoly q_binomial(int n, int k);
/// (q^a;q)_n as a polynomial, a >= 0 allowed only; use QRat overload otherwise.
QPoly q_pochhammer_qpow(int a, int n);

}  // namespace qvol
