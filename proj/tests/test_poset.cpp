#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qvol/poset.hpp"
#include "qvol/qrat.hpp"
#include "qvol/qseries.hpp"

using namespace qvol;

namespace {

Poset random_poset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) rel.emplace_back(i, j);  // i < j keeps it acyclic
  return Poset(n, rel);
}

// Count linear extensions by filtering all n! orders.
long brute_count_extensions(const Poset& P) {
  int n = P.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  long count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (P.less(perm[b], perm[a])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Count by the delete-a-minimal-element recursion.
long recursive_count(const Poset& P, uint64_t removed) {
  int n = P.size();
  if (__builtin_popcountll(removed) == n) return 1;
  long total = 0;
  for (int i = 0; i < n; ++i) {
    if ((removed >> i) & 1) continue;
    if ((P.below_mask(i) & ~removed) != 0) continue;
    total += recursive_count(P, removed | (uint64_t(1) << i));
  }
  return total;
}

}  // namespace

TEST_CASE("poset construction and closure") {
  Poset P(4, {{0, 1}, {1, 2}});
  CHECK(P.less(0, 2));  // transitive closure
  CHECK(!P.less(2, 0));
  CHECK(!P.comparable(0, 3));
  CHECK(P.cover_relations() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), arithmetic_error);
  Poset D = P.dual();
  CHECK(D.less(2, 0));
  CHECK(D.dual() == P);
  Poset M = P.with_minimum_prepended();
  CHECK(M.size() == 5);
  for (int j = 1; j < 5; ++j) CHECK(M.less(0, j));
  CHECK(M.less(1, 3));
}

TEST_CASE("linear extension counts agree with brute force") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 6;
    Poset P = random_poset(rng, n);
    long c = count_linear_extensions(P);
    CHECK(c == brute_count_extensions(P));
    CHECK(c == recursive_count(P, 0));
  }
  CHECK(count_linear_extensions(Poset::chain(8)) == 1);
  CHECK(count_linear_extensions(Poset::antichain(6)) == 720);
  CHECK_THROWS_AS(count_linear_extensions(Poset::antichain(10), 1000),
                  cap_exceeded);
}

TEST_CASE("word statistics") {
  WordStats s = word_stats({3, 1, 4, 2});
  CHECK(s.des == 2);
  CHECK(s.maj == 1 + 3);
  CHECK(s.inv == 3);
  CHECK(s.descent_positions == std::vector<int>{1, 3});
  CHECK(word_stats({1, 2, 3}).maj == 0);
}

TEST_CASE("maj generating function") {
  // Antichain: all of S_n, so maj-gf is [n]_q!.
  for (int n = 1; n <= 5; ++n) {
    CHECK(maj_gf(Poset::antichain(n), natural_labeling(n)) == q_factorial(n));
  }
  // Naturally labeled chain: single extension with maj 0.
  CHECK(maj_gf(Poset::chain(5), natural_labeling(5)) == QPoly(1));
}

TEST_CASE("p-partition generating function matches maj formula") {
  // sum_sigma q^{|sigma|} = maj_gf / (q;q)_n for any poset and labeling.
  std::mt19937 rng(7);
  int D = 14;
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 5;
    Poset P = random_poset(rng, n);
    std::vector<int> omega = natural_labeling(n);
    std::shuffle(omega.begin(), omega.end(), rng);
    QPoly lhs = ppartition_gf(P, omega, D);
    QRat rhs = QRat(maj_gf(P, omega), q_pochhammer_qpow(1, n));
    CHECK(expand_series(lhs, D) == expand_series(rhs, D));
  }
}

TEST_CASE("bounded p-partitions") {
  // Chain x_0 < x_1 with natural labels: sigma(x_0) >= sigma(x_1), both in
  // [0, m]: count of pairs a >= b weighted q^{a+b} is the Gaussian binomial
  // [m+2 choose 2].
  int m = 4;
  Poset C = Poset::chain(2);
  QPoly gf = ppartition_gf_bounded(C, natural_labeling(2), {0, 0},
                                   {m + 1, m + 1}, 2 * m);
  CHECK(gf == q_binomial(m + 2, 2));
}

TEST_CASE("json round trip") {
  Poset P(3, {{0, 2}, {1, 2}});
  std::vector<int> omega = {2, 1, 3};
  std::string text = poset_to_json(P, omega);
  std::vector<int> omega2;
  Poset Q = poset_from_json(text, &omega2);
  CHECK(Q == P);
  CHECK(omega2 == omega);
  std::vector<int> omega3;
  Poset R = poset_from_json("{\"n\":2,\"covers\":[[0,1]]}", &omega3);
  CHECK(R == Poset::chain(2));
  CHECK(omega3 == natural_labeling(2));
  CHECK_THROWS(poset_from_json("{\"covers\":[]}", nullptr));
}
