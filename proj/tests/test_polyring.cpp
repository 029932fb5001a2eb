#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "core/polyring.hpp"

using namespace weyl;
using namespace weyl::polyring;

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Poly monomial(int n, int d, const std::vector<std::vector<int>>& table, Rat c = 1) {
  Poly p(n, d);
  MultiMonomial m(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) m.at(i, k) = static_cast<uint16_t>(table[i][k]);
  p.add_term(m, c);
  return p;
}

Poly random_poly(std::mt19937& rng, int n, int d) {
  std::uniform_int_distribution<int> expo(0, 2), coef(-3, 3), nterms(1, 4);
  Poly p(n, d);
  int t = nterms(rng);
  for (int j = 0; j < t; ++j) {
    MultiMonomial m(n, d);
    for (auto& e : m.exp) e = static_cast<uint16_t>(expo(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

// multi-exponents alpha in N^d with 1 <= |alpha| <= maxw
std::vector<std::vector<int>> small_exponents(int d, int maxw) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == d) {
      if (std::accumulate(cur.begin(), cur.end(), 0) >= 1) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[k] = e;
      self(self, k + 1, left - e);
      cur[k] = 0;
    }
  };
  rec(rec, 0, maxw);
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  std::mt19937 rng(4242);
  Poly zero(2, 1);
  Poly p = random_poly(rng, 2, 1);
  CHECK(equal(add(p, zero), p));

  // (x1 + x2)(x1 - x2) = x1^2 - x2^2
  Poly x1 = monomial(2, 1, {{1}, {0}});
  Poly x2 = monomial(2, 1, {{0}, {1}});
  Poly prod = mul(add(x1, x2), sub(x1, x2));
  Poly expect = sub(monomial(2, 1, {{2}, {0}}), monomial(2, 1, {{0}, {2}}));
  CHECK(equal(prod, expect));

  Poly q(3, 1);
  CHECK_THROWS_AS(add(p, q), UsageError);
}

TEST_CASE("property: multiplication commutes") {
  std::mt19937 rng(555);
  for (int it = 0; it < 120; ++it) {
    int n = 1 + rng() % 3, d = 1 + rng() % 2;
    Poly p = random_poly(rng, n, d), q = random_poly(rng, n, d);
    CHECK(equal(mul(p, q), mul(q, p)));
  }
}

TEST_CASE("block permutation action") {
  Poly p = monomial(2, 2, {{1, 0}, {0, 0}});
  CHECK(equal(permute_blocks({0, 1}, p), p));
  Poly swapped = permute_blocks({1, 0}, p);
  CHECK(equal(swapped, monomial(2, 2, {{0, 0}, {1, 0}})));

  std::mt19937 rng(99);
  auto perms3 = all_permutations(3);
  for (int it = 0; it < 100; ++it) {
    Poly q = random_poly(rng, 3, 2);
    const auto& s = perms3[rng() % perms3.size()];
    const auto& t = perms3[rng() % perms3.size()];
    // group action: (st) . q = s . (t . q)
    std::vector<int> st(3);
    for (int i = 0; i < 3; ++i) st[i] = s[t[i]];
    CHECK(equal(permute_blocks(st, q), permute_blocks(s, permute_blocks(t, q))));
    // multidegree preserved term by term
    for (const auto& [m, c] : q.terms) {
      CHECK(permute_blocks(s, m).multidegree() == m.multidegree());
    }
  }
}

TEST_CASE("polarized power sums") {
  Poly p1 = polarized_power_sum({1}, 2);
  CHECK(equal(p1, add(monomial(2, 1, {{1}, {0}}), monomial(2, 1, {{0}, {1}}))));

  Poly p11 = polarized_power_sum({1, 1}, 2);
  CHECK(equal(p11, add(monomial(2, 2, {{1, 1}, {0, 0}}), monomial(2, 2, {{0, 0}, {1, 1}}))));

  CHECK_THROWS_AS(polarized_power_sum({0, 0}, 2), UsageError);
}

TEST_CASE("property: power sums are symmetric (exhaustive small cases)") {
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_permutations(n);
    for (int d = 1; d <= 2; ++d) {
      for (const auto& alpha : small_exponents(d, 4)) {
        Poly p = polarized_power_sum(alpha, n);
        for (const auto& s : perms) CHECK(equal(permute_blocks(s, p), p));
      }
    }
  }
}

TEST_CASE("reynolds projection") {
  // full symmetrization of a single monomial is the orbit average
  Poly x1a = monomial(3, 1, {{2}, {0}, {0}});
  Poly projected = reynolds({3}, x1a);
  Poly expect = scale(polarized_power_sum({2}, 3), make_rat(1, 3));
  CHECK(equal(projected, expect));

  std::mt19937 rng(321);
  Poly p = random_poly(rng, 3, 1);
  CHECK(equal(reynolds({1, 1, 1}, p), p));  // trivial subgroup
  CHECK_THROWS_AS(reynolds({2, 2}, p), UsageError);
}

TEST_CASE("property: reynolds is idempotent and fixes the subgroup") {
  std::mt19937 rng(777);
  std::vector<std::vector<int>> comps = {{3}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 0, 1}};
  for (int it = 0; it < 120; ++it) {
    Poly p = random_poly(rng, 3, 2);
    const auto& comp = comps[rng() % comps.size()];
    Poly r = reynolds(comp, p);
    CHECK(equal(reynolds(comp, r), r));
    for (const auto& g : young_subgroup(comp)) CHECK(equal(permute_blocks(g, r), r));
  }
}

TEST_CASE("monomial basis enumeration") {
  auto deg1 = monomial_basis(2, 1, {1});
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0].at(0, 0) == 1);  // x1 before x2 in graded-lex order
  CHECK(deg1[1].at(1, 0) == 1);

  CHECK(monomial_basis(2, 2, {1, 0}).size() == 2);
  CHECK(monomial_basis(3, 1, {2}).size() == 6);

  // sizes are products of per-coordinate stars-and-bars counts
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        auto basis = monomial_basis(n, 2, {a, b});
        CHECK(static_cast<long>(basis.size()) ==
              binom(a + n - 1, n - 1) * binom(b + n - 1, n - 1));
        CHECK(std::is_sorted(basis.begin(), basis.end(), GrlexLess{}));
        for (const auto& m : basis) CHECK(m.multidegree() == std::vector<int>{a, b});
      }

  // n = 0: only the empty monomial in multidegree zero
  CHECK(monomial_basis(0, 2, {0, 0}).size() == 1);
  CHECK(monomial_basis(0, 2, {1, 0}).empty());
}
