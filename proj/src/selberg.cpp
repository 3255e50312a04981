#include "qvol/selberg.hpp"

namespace qvol {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }
long choose3(long n) { return n * (n - 1) * (n - 2) / 6; }

mpz_class factorial(long k) {
  mpz_class f = 1;
  for (long i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

MLaurent selberg_integrand(int n, int r, int s, int m) {
  if (n < 1 || r < 0 || s < 0 || m < 0) {
    throw arithmetic_error("selberg_integrand: bad parameters");
  }
  MLaurent f = MLaurent::constant(n, QRat(1));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(n, 0);
    e[i - 1] = r;
    f *= MLaurent::monomial(n, e, QRat(1));
    f *= pochhammer_var(n, QRat::q_power(1), i, s);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> e(n, 0);
      e[j - 1] = 2 * m;
      f *= MLaurent::monomial(n, e, QRat(1));
      f *= pochhammer_ratio(n, 1 - m, i, j, m);
      f *= pochhammer_ratio(n, 0, i, j, m);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (f.min_exponent(i) < 0) {
      throw arithmetic_error("selberg_integrand: negative exponent");
    }
  }
  return f;
}

QRat selberg_direct(int n, int r, int s, int m) {
  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) chain[i] = i;
  return qint_simplex(selberg_integrand(n, r, s, m), chain, Bound::zero(),
                      Bound::one());
}

QRat selberg_closed_form(int n, int alpha, int beta, int m) {
  if (n < 1 || alpha < 1 || beta < 1 || m < 1) {
    throw arithmetic_error("selberg_closed_form: bad parameters");
  }
  QRat v = QRat::q_power(static_cast<int>(alpha * m * choose2(n) +
                                          2L * m * m * choose3(n)));
  for (int j = 1; j <= n; ++j) {
    v *= q_gamma_int(alpha + (j - 1) * m) * q_gamma_int(beta + (j - 1) * m) *
         q_gamma_int(j * m);
    v *= (q_gamma_int(alpha + beta + (n + j - 2) * m) * q_gamma_int(m))
             .inverse();
  }
  return v;
}

QRat selberg_via_poset(int n, int r, int s, int m, long max_extensions) {
  SelbergPosetData SP = build_selberg_poset(n, r, s, m);
  int N = SP.poset.size();
  QPoly gf = maj_gf(SP.poset, SP.omega, max_extensions);
  QRat pre = QRat::q_power(static_cast<int>(-choose2(m) * choose2(n)));
  pre *= QRat(q_factorial(r)).pow(n) * QRat(q_factorial(s)).pow(n) *
         QRat(q_factorial(m)).pow(static_cast<int>(2 * choose2(n)));
  return pre * QRat(gf) * QRat(q_factorial(N)).inverse();
}

QRat selberg_maj_closed(int n, int r, int s, int m) {
  if (n < 1 || r < 0 || s < 0 || m < 1) {
    throw arithmetic_error("selberg_maj_closed: bad parameters");
  }
  long N = static_cast<long>(n) * (r + s + 1) + 2L * m * choose2(n);
  QRat v = QRat::q_power(static_cast<int>(
      choose2(m) * choose2(n) + static_cast<long>(r + 1) * m * choose2(n) +
      2L * m * m * choose3(n)));
  v *= QRat(q_factorial(static_cast<int>(N)));
  v *= (QRat(q_factorial(r)).pow(n) * QRat(q_factorial(s)).pow(n) *
        QRat(q_factorial(m)).pow(static_cast<int>(2 * choose2(n))))
           .inverse();
  for (int j = 1; j <= n; ++j) {
    v *= QRat(q_factorial(r + (j - 1) * m)) *
         QRat(q_factorial(s + (j - 1) * m)) * QRat(q_factorial(j * m - 1));
    v *= (QRat(q_factorial(r + s + 1 + (n + j - 2) * m)) *
          QRat(q_factorial(m - 1)))
             .inverse();
  }
  return v;
}

CubeCheck selberg_cube_form(int n, int alpha, int beta, int m) {
  if (n < 1 || alpha < 1 || beta < 1 || m < 0) {
    throw arithmetic_error("selberg_cube_form: bad parameters");
  }
  int r = alpha - 1, s = beta - 1;
  MLaurent f = MLaurent::constant(n, QRat(1));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(n, 0);
    e[i - 1] = r;
    f *= MLaurent::monomial(n, e, QRat(1));
    f *= pochhammer_var(n, QRat::q_power(1), i, s);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> e(n, 0);
      e[j - 1] = 2 * m;
      f *= MLaurent::monomial(n, e, QRat(1));
      f *= pochhammer_ratio(n, 1 - m, i, j, 2 * m);
    }
  }
  std::vector<Bound> lo(n, Bound::zero()), hi(n, Bound::one());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  QRat lhs = qint_eliminate(f, Poset::antichain(n), lo, hi, order);
  QRat rhs = QRat::q_power(static_cast<int>(alpha * m * choose2(n) +
                                            2L * m * m * choose3(n)));
  for (int j = 1; j <= n; ++j) {
    rhs *= q_gamma_int(alpha + (j - 1) * m) *
           q_gamma_int(beta + (j - 1) * m) * q_gamma_int(1 + j * m);
    rhs *= (q_gamma_int(alpha + beta + (n + j - 2) * m) * q_gamma_int(1 + m))
               .inverse();
  }
  return {lhs, rhs};
}

mpq_class selberg_closed_form_classical(int n, int alpha, int beta, int m) {
  mpq_class v = 1;
  for (int j = 1; j <= n; ++j) {
    v *= mpq_class(factorial(alpha + (j - 1) * m - 1) *
                       factorial(beta + (j - 1) * m - 1) *
                       factorial(j * m - 1),
                   factorial(alpha + beta + (n + j - 2) * m - 1) *
                       factorial(m - 1));
  }
  v.canonicalize();
  return v;
}

mpq_class selberg_classical_reference(int n, int alpha, int beta, int m) {
  mpq_class v(1, factorial(n));
  for (int j = 1; j <= n; ++j) {
    v *= mpq_class(factorial(alpha + (j - 1) * m - 1) *
                       factorial(beta + (j - 1) * m - 1) * factorial(j * m),
                   factorial(alpha + beta + (n + j - 2) * m - 1) *
                       factorial(m));
  }
  v.canonicalize();
  return v;
}

}  // namespace qvol
