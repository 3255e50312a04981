#pragma once

#include "qvol/qrat.hpp"

namespace qvol {

/// Truncated power series in q with rational coefficients, tracked through
/// degree order(). Arithmetic between two series truncates at the smaller
/// order.
class QSeries {
 public:
  QSeries(int order) : order_(order), coeffs_(order + 1, Rat(0)) {
    if (order < 0) throw arithmetic_error("QSeries: negative order");
  }

  int order() const { return order_; }
  const Rat& coeff(int k) const { return coeffs_.at(k); }
  Rat& coeff(int k) { return coeffs_.at(k); }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  bool operator==(const QSeries& o) const;  // requires equal order
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  /// Truncate (or zero-extend never happens: new_order <= order required).
  QSeries truncate(int new_order) const;

  std::string to_string() const;

 private:
  int order_;
  std::vector<Rat> coeffs_;
};

/// Maclaurin expansion of r through degree N; requires the denominator to
/// have a nonzero constant term.
QSeries expand_series(const QRat& r, int N);

/// Expansion of a polynomial (always exact through N).
QSeries expand_series(const QPoly& p, int N);

}  // namespace qvol
