#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/uea.hpp"

using namespace weyl;
using namespace weyl::uea;

TEST_CASE("hand-computed rewritings") {
  // (e@P1) f f v = -2 (f@P1) v
  auto t = normal_order_apply({{Gen::E, {1}}, {Gen::F, {}}, {Gen::F, {}}});
  REQUIRE(t.size() == 1);
  CHECK(t.at({{1}}) == -2);

  // f^m alone survives with coefficient one
  for (int m = 1; m <= 4; ++m) {
    CurrentWord w(m, Letter{Gen::F, {}});
    auto table = normal_order_apply(w);
    REQUIRE(table.size() == 1);
    CHECK(table.at(FProduct(m, FormalCoeff{})) == 1);
  }

  // (e@P1) f v: the single commutation leaves (h@P1) v = 0
  CHECK(normal_order_apply({{Gen::E, {1}}, {Gen::F, {}}}).empty());

  // e or h directly against the vector annihilates
  CHECK(normal_order_apply({{Gen::E, {1}}}).empty());
  CHECK(normal_order_apply({{Gen::H, {1}}}).empty());
}

TEST_CASE("cocktail servings") {
  CHECK(enumerate_servings(1, 2) == std::vector<CocktailServing>{{{1, 2}}});
  auto s22 = enumerate_servings(2, 2);
  REQUIRE(s22.size() == 2);
  CHECK(s22[0] == CocktailServing{{}, {1, 2}});
  CHECK(s22[1] == CocktailServing{{1}, {2}});

  CHECK(enumerate_servings(0, 0) == std::vector<CocktailServing>{{}});
  CHECK(enumerate_servings(0, 2).empty());
  CHECK(enumerate_servings(3, 3).size() == 5);  // 1 + 3 + 1 set partitions by block count
}

TEST_CASE("martini expansion") {
  auto r11 = martini_check(1, 1);
  CHECK(r11.pass);
  CHECK(r11.table.at({{1}}) == -2);

  for (int m = 0; m <= 3; ++m) {
    auto r = martini_check(m, 0);
    CHECK(r.pass);
    CHECK(r.table.at(FProduct(m, FormalCoeff{})) == 1);
  }

  auto r12 = martini_check(1, 2);
  CHECK(r12.pass);
  REQUIRE(r12.table.size() == 1);

  // m = 0, n > 0: everything cancels
  for (int n = 1; n <= 3; ++n) {
    auto r = martini_check(0, n);
    CHECK(r.pass);
    CHECK(r.table.empty());
  }

  for (int n = 0; n <= 5; ++n)
    for (int m = 0; n + m <= 5; ++m) CHECK(martini_check(m, n).pass);
}

TEST_CASE("single-glass specialization") {
  for (int k = 1; k <= 4; ++k) {
    auto rep = anr_check(k);
    CHECK(rep.pass);
    CHECK(rep.coeff != 0);
    if (k % 2 == 1) CHECK(rep.coeff < 0);
  }
  CHECK(anr_check(1).coeff == -2);
}

TEST_CASE("property: coefficients symmetric under symbol relabeling") {
  // exchanging P_i and P_j in the word permutes the table keys and
  // leaves the coefficients unchanged
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto base = martini_check(m, n).table;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          auto relabel = [&](int s) { return s == a ? b : s == b ? a : s; };
          std::map<FProduct, Int> mapped;
          for (const auto& [key, c] : base) {
            FProduct k2;
            for (const auto& glass : key) {
              FormalCoeff g2;
              for (int s : glass) g2.push_back(relabel(s));
              std::sort(g2.begin(), g2.end());
              k2.push_back(std::move(g2));
            }
            std::sort(k2.begin(), k2.end());
            mapped[k2] = c;
          }
          CHECK(mapped == base);
        }
    }
}

TEST_CASE("property: rewriting order does not change the result") {
  std::mt19937 rng(60601);
  int cases = 0;
  while (cases < 120) {
    // random word over e/h/f with random small coefficients
    std::uniform_int_distribution<int> len(1, 6), kind(0, 2), sym(0, 2);
    CurrentWord w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
      Letter letter;
      int k = kind(rng);
      letter.gen = k == 0 ? Gen::E : k == 1 ? Gen::H : Gen::F;
      int nsym = sym(rng);
      for (int s = 0; s < nsym; ++s) letter.coeff.push_back(1 + rng() % 3);
      std::sort(letter.coeff.begin(), letter.coeff.end());
      w.push_back(std::move(letter));
    }
    auto reference = normal_order_apply(w, Strategy::Leftmost);
    for (unsigned seed = 1; seed <= 3; ++seed)
      CHECK(normal_order_apply(w, Strategy::Randomized, rng()) == reference);
    ++cases;
  }
}
