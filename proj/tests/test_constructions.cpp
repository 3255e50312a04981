#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "qvol/constructions.hpp"
#include "qvol/selberg.hpp"

using namespace qvol;

namespace {

// all parent vectors with parent[i] > i (or -1), i.e. naturally labeled
// forests, deduplicated up to isomorphism by a canonical subtree string
std::vector<std::vector<int>> forests_up_to_iso(int n) {
  std::vector<std::vector<int>> out;
  std::set<std::string> seen;
  std::vector<int> parent(n, -1);
  std::function<std::string(const std::vector<std::vector<int>>&, int)> canon =
      [&](const std::vector<std::vector<int>>& ch, int v) -> std::string {
    std::vector<std::string> subs;
    for (int c : ch[v]) subs.push_back(canon(ch, c));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (auto& t : subs) s += t;
    return s + ")";
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::vector<int>> ch(n);
      std::vector<std::string> roots;
      for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) ch[parent[v]].push_back(v);
      }
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0) roots.push_back(canon(ch, v));
      }
      std::sort(roots.begin(), roots.end());
      std::string key;
      for (auto& t : roots) key += t;
      if (seen.insert(key).second) out.push_back(parent);
      return;
    }
    parent[i] = -1;
    rec(i + 1);
    for (int p = i + 1; p < n; ++p) {
      parent[i] = p;
      rec(i + 1);
    }
    parent[i] = -1;
  };
  rec(0);
  return out;
}

Poset forest_from_parents(const std::vector<int>& parent) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
    if (parent[i] >= 0) rels.emplace_back(i, parent[i]);
  }
  return Poset(static_cast<int>(parent.size()), rels);
}

QRat forest_monomial_integral(const Poset& F, const std::vector<int>& a) {
  int n = F.size();
  std::vector<int> e(a);
  MLaurent f = MLaurent::monomial(n, e, QRat(1));
  std::vector<Bound> lo(n, Bound::zero()), hi(n, Bound::one());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return qint_eliminate(f, F, lo, hi, order);
}

std::vector<std::vector<int>> partitions_up_to(int max_size, int max_len) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      if (static_cast<int>(cur.size()) == max_len) return;
      cur.push_back(p);
      out.push_back(cur);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

}  // namespace

TEST_CASE("forest predicate and hooks") {
  CHECK(is_forest(Poset::chain(4)));
  CHECK(is_forest(Poset::antichain(3)));
  // diamond: 0 < 1, 0 < 2, 1 < 3, 2 < 3 is not a forest (0 has two covers)
  Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_forest(diamond));
  auto h = forest_hooks(Poset::chain(4));
  CHECK(h == std::vector<int>{1, 2, 3, 4});
  // star: leaves 1..3 below root 0
  Poset star(4, {{1, 0}, {2, 0}, {3, 0}});
  CHECK(forest_hooks(star) == std::vector<int>{4, 1, 1, 1});
}

TEST_CASE("attaching leaves reproduces the worked hook example") {
  Poset F(9, {{0, 2}, {1, 2}, {2, 4}, {3, 4}, {6, 8}, {7, 8}});
  REQUIRE(is_forest(F));
  std::vector<int> a = {0, 3, 2, 1, 2, 3, 0, 2, 1};
  Poset Fa = attach_leaves(F, a);
  CHECK(Fa.size() == 9 + 14);
  REQUIRE(is_forest(Fa));
  auto h = forest_hooks(Fa);
  std::vector<int> expect = {1, 4, 8, 2, 13, 4, 1, 3, 6};
  for (int i = 0; i < 9; ++i) CHECK(h[i] == expect[i]);
  for (int i = 9; i < Fa.size(); ++i) CHECK(h[i] == 1);
  // attaching no leaves changes nothing
  CHECK(attach_leaves(F, std::vector<int>(9, 0)) == F);
  // single node with k leaves
  Poset single(1, {});
  auto star = attach_leaves(single, {3});
  auto hs = forest_hooks(star);
  CHECK(hs == std::vector<int>{4, 1, 1, 1});
}

TEST_CASE("forest monomial integral equals the hook product") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& parent : forests_up_to_iso(n)) {
      Poset F = forest_from_parents(parent);
      std::vector<int> a(n, 0);
      while (true) {
        Poset Fa = attach_leaves(F, a);
        QRat expect(1L);
        for (int hv : forest_hooks(Fa)) expect *= QRat(q_number(hv)).inverse();
        CHECK(forest_monomial_integral(F, a) == expect);
        int i = 0;
        while (i < n && a[i] == 2) a[i++] = 0;
        if (i == n) break;
        ++a[i];
      }
    }
  }
}

TEST_CASE("forest q-volume and maj generating function hook formulas") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& parent : forests_up_to_iso(n)) {
      Poset F = forest_from_parents(parent);
      QRat vol(1L);
      for (int hv : forest_hooks(F)) vol *= QRat(q_number(hv)).inverse();
      CHECK(forest_monomial_integral(F, std::vector<int>(n, 0)) == vol);
      QRat expect_gf = QRat(q_factorial(n)) * vol;
      CHECK(QRat(maj_gf(F, natural_labeling(n))) == expect_gf);
    }
  }
}

TEST_CASE("chain-with-inserted-chains poset builder") {
  auto big = build_selberg_poset(4, 2, 1, 3);
  CHECK(big.poset.size() == 52);
  CHECK(big.names[0] == "w1,2_1");
  CHECK(big.names[17] == "w3,4_3");
  CHECK(big.names[18] == "w2,1_1");
  CHECK(big.names[35] == "w4,3_3");
  CHECK(big.names[36] == "y1_1");
  CHECK(big.names[44] == "x1");
  CHECK(big.names[48] == "z1_1");
  CHECK(big.omega[0] == 1);
  CHECK(big.omega[51] == 52);

  auto tiny = build_selberg_poset(1, 0, 0, 1);
  CHECK(tiny.poset.size() == 1);

  auto small = build_selberg_poset(2, 0, 0, 1);
  REQUIRE(small.poset.size() == 4);
  // x1 = 2, x2 = 3, w12 = 0, w21 = 1
  CHECK(small.names == std::vector<std::string>{"w1,2_1", "w2,1_1", "x1", "x2"});
  CHECK(small.poset.less(2, 0));
  CHECK(small.poset.less(0, 3));
  CHECK(small.poset.less(2, 1));
  CHECK(small.poset.less(1, 3));
  CHECK_FALSE(small.poset.comparable(0, 1));
  CHECK(small.poset.less(2, 3));
}

TEST_CASE("maj generating function of the inserted-chain poset factors") {
  int specs[][4] = {{2, 0, 0, 1}, {2, 1, 0, 1}, {2, 0, 1, 1},
                    {2, 1, 1, 1}, {3, 0, 0, 1}};
  for (auto& p : specs) {
    auto SP = build_selberg_poset(p[0], p[1], p[2], p[3]);
    QRat gf = QRat(maj_gf(SP.poset, SP.omega));
    CHECK(gf == selberg_maj_closed(p[0], p[1], p[2], p[3]));
  }
}

TEST_CASE("attaching a chain below trades a power for a chain") {
  Poset single(1, {});
  auto c = verify_chain_below(single, 0, 2, MLaurent::constant(1, QRat(1)));
  CHECK(c.lhs == QRat(q_number(3)).inverse());
  CHECK(c.equal());
  Poset vee(3, {{0, 2}, {1, 2}});
  for (int t = 0; t < 3; ++t) {
    for (int m = 1; m <= 2; ++m) {
      auto chk = verify_chain_below(vee, t, m,
                                    MLaurent::monomial(3, {1, 0, 1}, QRat(1)));
      CHECK(chk.equal());
    }
  }
}

TEST_CASE("attaching a chain above trades a q-factor for a chain") {
  Poset single(1, {});
  auto c = verify_chain_above(single, 0, 1, MLaurent::constant(1, QRat(1)));
  CHECK(c.lhs == QRat(q_number(2)).inverse());
  CHECK(c.equal());
  Poset vee(3, {{0, 2}, {1, 2}});
  for (int s = 0; s < 3; ++s) {
    for (int m = 1; m <= 2; ++m) {
      auto chk = verify_chain_above(vee, s, m,
                                    MLaurent::monomial(3, {0, 1, 1}, QRat(1)));
      CHECK(chk.equal());
    }
  }
}

TEST_CASE("attaching a chain between two comparable elements") {
  Poset chain2 = Poset::chain(2);
  Poset chain3 = Poset::chain(3);
  std::vector<std::vector<int>> rhos2 = {{1, 2}, {2, 1}};
  std::vector<std::vector<int>> rhos3 = {{1, 2, 3}, {2, 1, 3}, {3, 1, 2},
                                         {1, 3, 2}, {2, 3, 1}, {3, 2, 1}};
  for (int variant : {1, 2}) {
    for (auto& rho : rhos2) {
      CHECK(verify_attach_chain(chain2, 0, 1, 2, rho,
                                MLaurent::constant(2, QRat(1)), variant)
                .equal());
      CHECK(verify_attach_chain(chain2, 0, 1, 2, rho,
                                MLaurent::monomial(2, {1, 2}, QRat(1)),
                                variant)
                .equal());
      CHECK(verify_attach_chain(chain3, 0, 2, 2, rho,
                                MLaurent::monomial(3, {0, 1, 0}, QRat(1)),
                                variant)
                .equal());
    }
    for (auto& rho : rhos3) {
      CHECK(verify_attach_chain(chain2, 0, 1, 3, rho,
                                MLaurent::constant(2, QRat(1)), variant)
                .equal());
    }
  }
}

TEST_CASE("interlacing a chain trades a Schur factor") {
  Poset chain3 = Poset::chain(3);
  CHECK(verify_interlacing(chain3, {0, 1, 2}, Partition{1},
                           MLaurent::constant(3, QRat(1)), 1)
            .equal());
  CHECK(verify_interlacing(chain3, {0, 1, 2}, Partition{1, 1, 1},
                           MLaurent::constant(3, QRat(1)), 2)
            .equal());
  // chain of two plus an incomparable element carrying the extra factor
  Poset P(3, {{0, 1}});
  CHECK(verify_interlacing(P, {0, 1}, Partition{2},
                           MLaurent::monomial(3, {0, 0, 1}, QRat(1)), 1)
            .equal());
  CHECK(verify_interlacing(P, {0, 1}, Partition{2, 1},
                           MLaurent::monomial(3, {0, 0, 2}, QRat(1)), 2)
            .equal());
}

TEST_CASE("determinant interlacing identities, symbolically") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& lam : partitions_up_to(4, n - 1)) {
      CHECK(check_schur_interlacing(Partition(lam), n, 1));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : partitions_up_to(4, n)) {
      if (static_cast<int>(lam.size()) == n) {
        CHECK(check_schur_interlacing(Partition(lam), n, 2));
      }
    }
  }
}

TEST_CASE("staircase-cell poset builder") {
  auto sp = build_schur_poset(5, Partition{4, 3, 1}, true);
  CHECK(sp.poset.size() == 23);
  CHECK(sp.diag_sizes[0] == 5);
  auto sp2 = build_schur_poset(5, Partition{4, 3, 1}, false);
  CHECK(sp2.poset.size() == 18);
  auto tiny = build_schur_poset(2, Partition{}, false);
  CHECK(tiny.poset.size() == 1);
  // labels run over diagonals from the top, southeast-first
  CHECK(sp2.cells[0].diag == 8);
  CHECK(sp2.omega[0] == 1);
}

TEST_CASE("reduced staircase poset is a smaller full staircase poset") {
  auto index_of = [](const SchurPosetData& S) {
    std::map<std::pair<int, int>, int> m;
    for (int e = 0; e < S.poset.size(); ++e) {
      m[{S.cells[e].diag, S.cells[e].index}] = e;
    }
    return m;
  };
  auto check_iso = [&](const SchurPosetData& A, const SchurPosetData& B) {
    REQUIRE(A.poset.size() == B.poset.size());
    auto mb = index_of(B);
    std::vector<int> phi(A.poset.size());
    for (int e = 0; e < A.poset.size(); ++e) {
      auto it = mb.find({A.cells[e].diag - 1, A.cells[e].index});
      REQUIRE(it != mb.end());
      phi[e] = it->second;
    }
    for (int e1 = 0; e1 < A.poset.size(); ++e1) {
      for (int e2 = 0; e2 < A.poset.size(); ++e2) {
        CHECK(A.poset.less(e1, e2) == B.poset.less(phi[e1], phi[e2]));
      }
    }
  };
  for (int n = 2; n <= 4; ++n) {
    for (const auto& lam : partitions_up_to(3, n)) {
      Partition lambda(lam);
      if (lambda.length() <= n - 1) {
        check_iso(build_schur_poset(n, lambda, false),
                  build_schur_poset(n - 1, lambda, true));
      } else {
        std::vector<int> shrunk;
        for (int p : lam) shrunk.push_back(p - 1);
        check_iso(build_schur_poset(n, lambda, false),
                  build_schur_poset(n, Partition(shrunk), true));
      }
    }
  }
}

TEST_CASE("truncated staircase volume evaluates the Schur polynomial") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : partitions_up_to(3, n)) {
      Partition lambda(lam);
      auto SP = build_schur_poset(n, lambda, false);
      for (const auto& mu : partitions_up_to(3, n)) {
        Partition muP(mu);
        QRat lhs = schur_poset_integral(SP, muP);
        for (int j = 1; j <= n; ++j) {
          lhs *= QRat(q_factorial(lambda.part(j) + n - j));
        }
        MLaurent sd = schur(lambda, n) * vandermonde_bar(n);
        std::vector<int> e(n);
        for (int j = 1; j <= n; ++j) e[j - 1] = muP.part(j) + n - j;
        CHECK(lhs == sd.substitute_qpowers(e));
      }
    }
  }
}
