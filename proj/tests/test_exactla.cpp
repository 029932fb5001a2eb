#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/sparse.hpp"
#include "support/brute.hpp"

using namespace weyl;
using namespace weyl::exactla;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<Rat>>& a) {
  SparseMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c] != 0) m.set(r, c, a[r][c]);
  return m;
}

std::vector<std::vector<Rat>> random_dense(std::mt19937& rng, size_t rows, size_t cols,
                                           int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (auto& row : a)
    for (auto& x : row) x = coef(rng);
  return a;
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField f(kDefaultPrimeA);
  CHECK(is_prime(kDefaultPrimeA));
  CHECK(is_prime(kDefaultPrimeB));
  for (uint64_t q : kFallbackPrimes) CHECK(is_prime(q));
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.reduce(Rat(1, 3)) == f.mul(1, f.inv(3)));
  CHECK_THROWS_AS(f.reduce(make_rat(1, Int(kDefaultPrimeA))), ReductionError);
}

TEST_CASE("rank: pinned small cases") {
  SparseMatrix zero(3, 3);
  CHECK(rank(zero, RankMode::Rational) == 0);
  CHECK(rank(zero, RankMode::Prime, kDefaultPrimeA) == 0);

  SparseMatrix id(4, 4);
  for (size_t i = 0; i < 4; ++i) id.set(i, i, 1);
  CHECK(rank(id, RankMode::Rational) == 4);
  CHECK(rank(id, RankMode::Prime, kDefaultPrimeB) == 4);

  // proportional rows
  auto m = from_dense({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(m, RankMode::Rational) == 1);
  CHECK(brute::dense_rank({{1, 2, 3}, {2, 4, 6}}) == 1);

  SparseMatrix empty(0, 0);
  CHECK(rank(empty, RankMode::Rational) == 0);
  CHECK(crosscheck_rank(empty, kDefaultPrimeA, kDefaultPrimeB) == 0);
}

TEST_CASE("crosscheck: identity and escalation") {
  SparseMatrix id(3, 3);
  for (size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(crosscheck_rank(id, kDefaultPrimeA, kDefaultPrimeB) == 3);

  // An entry equal to p1 vanishes mod p1, forcing disagreement between the
  // two primes and an escalation to exact arithmetic.
  SparseMatrix m(1, 1);
  m.set(0, 0, Rat(Int(kDefaultPrimeA)));
  RankProvenance prov;
  CHECK(crosscheck_rank(m, kDefaultPrimeA, kDefaultPrimeB, &prov) == 1);
  CHECK(prov.escalated);
}

TEST_CASE("crosscheck: reduction error retries a fallback prime") {
  SparseMatrix m(2, 2);
  m.set(0, 0, make_rat(1, Int(kDefaultPrimeA)));
  m.set(1, 1, 1);
  RankProvenance prov;
  CHECK(crosscheck_rank(m, kDefaultPrimeA, kDefaultPrimeB, &prov) == 2);
  CHECK(prov.reduction_retries >= 1);
}

TEST_CASE("rank agrees with dense oracle on random matrices") {
  std::mt19937 rng(20240601);
  for (int it = 0; it < 120; ++it) {
    size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    auto a = random_dense(rng, rows, cols);
    size_t expected = brute::dense_rank(a);
    CHECK(rank(from_dense(a), RankMode::Rational) == expected);
    CHECK(crosscheck_rank(from_dense(a), kDefaultPrimeA, kDefaultPrimeB) == expected);
  }
}

TEST_CASE("property: rank invariant under permutations and row scaling") {
  std::mt19937 rng(7151);
  std::uniform_int_distribution<int> nz(1, 5);
  for (int it = 0; it < 120; ++it) {
    size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    auto a = random_dense(rng, rows, cols);
    size_t base = rank(from_dense(a), RankMode::Rational);

    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    for (auto& row : b) {
      Rat s = make_rat(nz(rng), nz(rng));
      for (auto& x : row) x *= s;
    }
    std::vector<size_t> colperm(cols);
    std::iota(colperm.begin(), colperm.end(), 0);
    std::shuffle(colperm.begin(), colperm.end(), rng);
    std::vector<std::vector<Rat>> c(rows, std::vector<Rat>(cols));
    for (size_t r = 0; r < rows; ++r)
      for (size_t k = 0; k < cols; ++k) c[r][colperm[k]] = b[r][k];

    CHECK(rank(from_dense(c), RankMode::Rational) == base);
  }
}

TEST_CASE("property: prime rank never exceeds rational rank, equal for small entries") {
  std::mt19937 rng(90210);
  for (int it = 0; it < 120; ++it) {
    size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
    auto a = random_dense(rng, rows, cols);
    size_t rq = rank(from_dense(a), RankMode::Rational);
    size_t rp = rank(from_dense(a), RankMode::Prime, kDefaultPrimeA);
    CHECK(rp <= rq);
    CHECK(rp == rq);  // p > 10^6 and entries in {-2..2}, dim <= 20
  }
}

TEST_CASE("sparse matrix invariants") {
  SparseMatrix m(2, 2);
  m.set(0, 0, 5);
  m.set(0, 0, 0);  // setting zero erases
  CHECK(m.entries().empty());
  CHECK_THROWS_AS(m.set(2, 0, 1), UsageError);
  CHECK_THROWS_AS(rank(m, RankMode::Prime, 4), UsageError);
  CHECK_THROWS_AS(crosscheck_rank(m, kDefaultPrimeA, kDefaultPrimeA), UsageError);
}
