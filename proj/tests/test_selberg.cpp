#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "qvol/selberg.hpp"

using namespace qvol;

namespace {

MLaurent permute_vars(const MLaurent& f, const std::vector<int>& perm) {
  MLaurent g(f.nvars());
  for (const auto& [exps, c] : f.terms()) {
    std::vector<int> e(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) e[perm[i]] = exps[i];
    g.add_term(e, c);
  }
  return g;
}

}  // namespace

TEST_CASE("integrand structure") {
  // m = 0 keeps only the one-variable factors
  MLaurent f0 = selberg_integrand(2, 1, 1, 0);
  MLaurent expect = MLaurent::monomial(2, {1, 1}, QRat(1)) *
                    pochhammer_var(2, QRat::q_power(1), 1, 1) *
                    pochhammer_var(2, QRat::q_power(1), 2, 1);
  CHECK(f0 == expect);
  // the full integrand is a symmetric polynomial with nonnegative exponents
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      MLaurent f = selberg_integrand(n, 1, 1, m);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      while (std::next_permutation(perm.begin(), perm.end())) {
        CHECK(permute_vars(f, perm) == f);
      }
    }
  }
  // n = 1 has no pair factors: plain q-beta integrand
  CHECK(selberg_integrand(1, 2, 1, 5) ==
        MLaurent::monomial(1, {2}, QRat(1)) *
            pochhammer_var(1, QRat::q_power(1), 1, 1));
}

TEST_CASE("closed form matches the q-beta integral at n = 1") {
  for (int r = 0; r <= 5; ++r) {
    for (int s = 0; s <= 5; ++s) {
      QRat expect = QRat(q_factorial(r)) * QRat(q_factorial(s)) *
                    QRat(q_factorial(r + s + 1)).inverse();
      CHECK(selberg_direct(1, r, s, 1) == expect);
      CHECK(selberg_closed_form(1, r + 1, s + 1, 1) == expect);
    }
  }
}

TEST_CASE("direct, closed-form, and poset evaluations agree") {
  struct Spec {
    int n, r, s, m;
  };
  std::vector<Spec> specs;
  for (int rs = 0; rs <= 7; ++rs) {
    for (int r = 0; r <= rs; ++r) specs.push_back({1, r, rs - r, 1});
  }
  for (int m = 1; m <= 3; ++m) {
    for (int rs = 0; rs + m <= 3; ++rs) {
      for (int r = 0; r <= rs; ++r) specs.push_back({2, r, rs - r, m});
    }
  }
  for (const auto& sp : specs) {
    long N = static_cast<long>(sp.n) * (sp.r + sp.s + 1) +
             static_cast<long>(sp.m) * sp.n * (sp.n - 1);
    REQUIRE(N <= 8);
    QRat direct = selberg_direct(sp.n, sp.r, sp.s, sp.m);
    CHECK(direct == selberg_closed_form(sp.n, sp.r + 1, sp.s + 1, sp.m));
    CHECK(direct == selberg_via_poset(sp.n, sp.r, sp.s, sp.m));
  }
}

TEST_CASE("closed form vs direct at larger parameters") {
  CHECK(selberg_direct(3, 0, 0, 1) == selberg_closed_form(3, 1, 1, 1));
  CHECK(selberg_direct(2, 1, 1, 1) == selberg_closed_form(2, 2, 2, 1));
}

TEST_CASE("cube form of the evaluation") {
  for (int alpha = 1; alpha <= 2; ++alpha) {
    for (int beta = 1; beta <= 2; ++beta) {
      for (int m = 0; m <= 2; ++m) {
        auto chk = selberg_cube_form(2, alpha, beta, m);
        CHECK(chk.equal());
      }
    }
  }
  // n = 1 cube form is the q-beta integral again
  auto chk1 = selberg_cube_form(1, 2, 3, 1);
  CHECK(chk1.equal());
}

TEST_CASE("classical limit by replacing q-integers with integers") {
  for (int n = 1; n <= 4; ++n) {
    for (int alpha = 1; alpha <= 3; ++alpha) {
      for (int beta = 1; beta <= 3; ++beta) {
        for (int m = 1; m <= 3; ++m) {
          CHECK(selberg_closed_form_classical(n, alpha, beta, m) ==
                selberg_classical_reference(n, alpha, beta, m));
        }
      }
    }
  }
  // and the q-closed form itself evaluates to the classical value at q = 1
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      QRat v = selberg_closed_form(n, 2, 2, m);
      CHECK(v.eval_one() ==
            mpq_class(selberg_closed_form_classical(n, 2, 2, m)));
    }
  }
}

TEST_CASE("maj closed form consistency with the integral routes") {
  // sum q^maj = [N]! * integral / prefactor, so the two closed forms must
  // combine consistently
  for (int n = 1; n <= 2; ++n) {
    for (int r = 0; r <= 1; ++r) {
      for (int s = 0; s <= 1; ++s) {
        QRat integral = selberg_closed_form(n, r + 1, s + 1, 1);
        long N = static_cast<long>(n) * (r + s + 1) + n * (n - 1);
        QRat pre = QRat(q_factorial(r)).pow(n) * QRat(q_factorial(s)).pow(n);
        // m = 1: [m]! factors and the q-power prefactor are trivial
        QRat expect_gf =
            integral * QRat(q_factorial(static_cast<int>(N))) * pre.inverse();
        CHECK(selberg_maj_closed(n, r, s, 1) == expect_gf);
      }
    }
  }
}
