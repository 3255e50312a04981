#pragma once

#include <map>
#include <vector>

#include "qvol/qrat.hpp"

namespace qvol {

/// Integer partition (weakly decreasing nonnegative parts, trailing zeros
/// trimmed).
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the length
    return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
  }
  long size() const;
  Partition transpose() const;
  /// b(lambda) = sum_i (i-1) * lambda_i.
  long b_stat() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }

  /// Staircase (n-1, n-2, ..., 1, 0).
  static Partition staircase(int n);
  /// Componentwise sum, padding with zeros.
  static Partition add(const Partition& a, const Partition& b);

  std::string to_string() const;

 private:
  void normalize();
};

/// Multivariate Laurent polynomial in x_1..x_n over the field of rational
/// functions in q. Terms keyed by exponent vectors (may be negative).
class MLaurent {
 public:
  explicit MLaurent(int nvars) : nvars_(nvars) {}

  static MLaurent zero(int nvars) { return MLaurent(nvars); }
  static MLaurent constant(int nvars, QRat c);
  /// c * x_1^{e_1} ... x_n^{e_n}.
  static MLaurent monomial(int nvars, const std::vector<int>& exps, QRat c);
  /// x_i (1-based).
  static MLaurent var(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, QRat>& terms() const { return terms_; }
  void add_term(const std::vector<int>& exps, const QRat& c);

  MLaurent operator-() const;
  MLaurent operator+(const MLaurent& o) const;
  MLaurent operator-(const MLaurent& o) const;
  MLaurent operator*(const MLaurent& o) const;
  MLaurent operator*(const QRat& c) const;
  MLaurent& operator+=(const MLaurent& o) { return *this = *this + o; }
  MLaurent& operator-=(const MLaurent& o) { return *this = *this - o; }
  MLaurent& operator*=(const MLaurent& o) { return *this = *this * o; }
  bool operator==(const MLaurent& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MLaurent& o) const { return !(*this == o); }

  /// Substitute x_i = q^{e_i}.
  QRat substitute_qpowers(const std::vector<int>& e) const;
  /// Substitute x_i = v_i for scalar rational functions v_i.
  QRat substitute(const std::vector<QRat>& v) const;
  /// Minimum exponent of x_i over all terms (0 if there are no terms).
  int min_exponent(int i) const;

  std::string to_string() const;  // graded-lex term order, names x1..xn

 private:
  int nvars_;
  std::map<std::vector<int>, QRat> terms_;
};

/// DeltaBar(x) = prod_{1 <= i < j <= n} (x_j - x_i).
MLaurent vandermonde_bar(int n);

/// Complete homogeneous symmetric polynomial h_k(x_1..x_n); h_k = 0 for k<0.
MLaurent complete_homogeneous(int n, int k);

/// Schur polynomial s_lambda(x_1..x_n) via the Jacobi-Trudi determinant.
/// Zero when the partition has more than n parts.
MLaurent schur(const Partition& lambda, int n);

/// prod_{t=0}^{m-1} (1 - q^{c+t} * x_i / x_j) as a Laurent polynomial
/// (1-based variable indices; i == 0 means the numerator variable is absent,
/// giving (q^c; q)_m as a constant).
MLaurent pochhammer_ratio(int nvars, int c, int i, int j, int m);

/// (a * x_i; q)_m = prod_{t=0}^{m-1} (1 - a q^t x_i) for scalar a.
MLaurent pochhammer_var(int nvars, const QRat& a, int i, int m);

/// Relabel variables: the exponent of old variable i (0-based) moves to
/// variable where[i] (0-based) in a polynomial on new_nvars variables.
MLaurent embed_vars(const MLaurent& f, const std::vector<int>& where,
                    int new_nvars);

}  // namespace qvol
