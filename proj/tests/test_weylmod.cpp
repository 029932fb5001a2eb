#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/combinat.hpp"
#include "core/weylmod.hpp"

using namespace weyl;
using namespace weyl::weylmod;

namespace {

PointMultiset line_points(std::vector<Rat> zs) {
  PointMultiset pts;
  pts.d = 1;
  for (auto& z : zs) pts.points.push_back({z});
  return pts;
}

}  // namespace

TEST_CASE("pair of coincident points (binomial weights)") {
  auto wc = points_weyl_character(line_points({0, 0}), 1, 2);
  CHECK(wc.at({2, 0}) == 1);
  CHECK(wc.at({1, 1}) == 2);
  CHECK(wc.at({0, 2}) == 1);
  CHECK(wc.total() == 4);
}

TEST_CASE("pair of distinct points (product of evaluations)") {
  auto wc = points_weyl_character(line_points({0, 1}), 1, 2);
  CHECK(wc.total() == 4);
  CHECK(wc.at({1, 1}) == 2);
}

TEST_CASE("single point gives the vector representation") {
  for (int r = 1; r <= 3; ++r) {
    auto wc = points_weyl_character(line_points({make_rat(5, 3)}), r);
    CHECK(wc.total() == r + 1);
    for (const auto& [comp, v] : wc.entries) CHECK(v == 1);
    CHECK(wc.entries.size() == static_cast<size_t>(r + 1));
  }
}

TEST_CASE("empty multiset is the trivial module") {
  auto wc = points_weyl_character(line_points({}), 2);
  CHECK(wc.total() == 1);
  CHECK(wc.at({0, 0, 0}) == 1);
}

TEST_CASE("all points at the origin match the coinvariant route") {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      PointMultiset pts = line_points(std::vector<Rat>(n, Rat(0)));
      auto via_points = points_weyl_character(pts, r);
      auto via_origin = origin_weyl_character(n, 1, r);
      CHECK(via_points == via_origin);
    }
}

TEST_CASE("origin characters for sl_2 are symmetric under weight negation") {
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= 2; ++d) {
      auto wc = origin_weyl_character(n, d, 1);
      for (const auto& [c, v] : wc.entries) CHECK(wc.at({c[1], c[0]}) == v);
      std::vector<int> top{n, 0};
      CHECK(wc.at(top) == 1);
    }
}

TEST_CASE("highest weight space is one-dimensional, character is Weyl-symmetric") {
  auto check_one = [](const PointMultiset& pts, int r) {
    auto wc = points_weyl_character(pts, r);
    std::vector<int> top(r + 1, 0);
    top[0] = pts.n();
    CHECK(wc.at(top) == 1);
    if (r == 1)
      for (const auto& [c, v] : wc.entries) CHECK(wc.at({c[1], c[0]}) == v);
  };
  check_one(line_points({0, 1, 1}), 1);
  check_one(line_points({2, 2, 2}), 1);
  check_one(line_points({0, make_rat(1, 2)}), 2);
}

TEST_CASE("tensor factorization over distinct locations") {
  auto rep = verify_tensor_factorization(line_points({0, 1, 2}), 1);
  CHECK(rep.pass);
  CHECK(rep.whole.total() == 8);
  CHECK(rep.factors.size() == 3);

  auto rep2 = verify_tensor_factorization(line_points({0, 0, 1}), 1);
  CHECK(rep2.pass);
  CHECK(rep2.whole.total() == 8);
  CHECK(rep2.factors[0].character.total() == 4);
  CHECK(rep2.factors[1].character.total() == 2);

  auto rep3 = verify_tensor_factorization(line_points({0, 0}), 1);
  CHECK(rep3.pass);
  CHECK(rep3.factors.size() == 1);
}

TEST_CASE("truncation stability certificates") {
  CHECK(truncation_stability_check(line_points({0, 0}), 1, 2));
  CHECK(truncation_stability_check(line_points({0}), 1, 1));

  std::mt19937 rng(31337);
  std::vector<Rat> pool{0, 1, 2, make_rat(1, 2), -1};
  for (int it = 0; it < 12; ++it) {
    int n = 1 + rng() % 3;
    std::vector<Rat> zs;
    for (int i = 0; i < n; ++i) zs.push_back(pool[rng() % pool.size()]);
    int r = 1 + rng() % 2;
    CHECK(truncation_stability_check(line_points(zs), r, n));
  }
}

TEST_CASE("guards") {
  PointMultiset plane;
  plane.d = 2;
  plane.points = {{0, 0}};
  CHECK_THROWS_AS(points_weyl_character(plane, 1), UnsupportedError);
  CHECK_THROWS_AS(points_weyl_character(line_points({0, 1}), 1, 1), UsageError);
  CHECK_THROWS_AS(truncation_stability_check(line_points({0, 1}), 1, 1), UsageError);
  CHECK_THROWS_AS(points_weyl_character(line_points({0}), 0), UsageError);
}

TEST_CASE("exact mode agrees with the crosscheck mode") {
  RankOptions exact;
  exact.exact = true;
  auto a = points_weyl_character(line_points({0, 1, 1}), 2, {}, exact);
  auto b = points_weyl_character(line_points({0, 1, 1}), 2);
  CHECK(a == b);
}
