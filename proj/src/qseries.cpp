#include "qvol/qseries.hpp"

#include <sstream>

namespace qvol {

QSeries QSeries::operator+(const QSeries& o) const {
  int n = std::min(order_, o.order_);
  QSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  int n = std::min(order_, o.order_);
  QSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  int n = std::min(order_, o.order_);
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  if (order_ != o.order_) {
    throw arithmetic_error("QSeries: comparing series of different order");
  }
  return coeffs_ == o.coeffs_;
}

QSeries QSeries::truncate(int new_order) const {
  if (new_order > order_) {
    throw arithmetic_error("QSeries::truncate: cannot extend order");
  }
  QSeries r(new_order);
  for (int k = 0; k <= new_order; ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (coeffs_[k] == 0) continue;
    Rat c = coeffs_[k];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

QSeries expand_series(const QPoly& p, int N) {
  QSeries r(N);
  for (int k = 0; k <= std::min(N, p.degree()); ++k) r.coeff(k) = Rat(p.coeff(k));
  return r;
}

QSeries expand_series(const QRat& r, int N) {
  const QPoly& num = r.num();
  const QPoly& den = r.den();
  if (den.degree() < 0 || den.coeff(0) == 0) {
    throw arithmetic_error(
        "expand_series: denominator has zero constant term (pole at q=0)");
  }
  // Solve den * s = num coefficient by coefficient.
  Rat d0(den.coeff(0));
  QSeries s(N);
  for (int k = 0; k <= N; ++k) {
    Rat acc = (k <= num.degree()) ? Rat(num.coeff(k)) : Rat(0);
    for (int j = 1; j <= std::min(k, den.degree()); ++j) {
      acc -= Rat(den.coeff(j)) * s.coeff(k - j);
    }
    acc /= d0;
    acc.canonicalize();
    s.coeff(k) = acc;
  }
  return s;
}

}  // namespace qvol
