#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "numeric.hpp"

namespace weyl::polyring {

// Exponent table of a monomial in n multivariables of dimension d: entry
// (i, k) is the exponent of coordinate k of the i-th multivariable,
// stored row-major in exp[i*d + k].
struct MultiMonomial {
  uint16_t n = 0;
  uint16_t d = 1;
  std::vector<uint16_t> exp;

  MultiMonomial() = default;
  MultiMonomial(int n_, int d_) : n(n_), d(d_), exp(size_t(n_) * d_, 0) {}

  uint16_t& at(int block, int coord) { return exp[size_t(block) * d + coord]; }
  uint16_t at(int block, int coord) const { return exp[size_t(block) * d + coord]; }

  int total_degree() const {
    int s = 0;
    for (auto e : exp) s += e;
    return s;
  }

  // column sums of the exponent table, an element of N^d
  std::vector<int> multidegree() const {
    std::vector<int> md(d, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) md[k] += at(i, k);
    return md;
  }

  bool operator==(const MultiMonomial& o) const { return n == o.n && d == o.d && exp == o.exp; }
};

// Graded-lexicographic term order on the flattened exponent table: lower
// total degree first, and within a degree the lexicographically larger
// table first. monomial_basis lists monomials in this order.
struct GrlexLess {
  bool operator()(const MultiMonomial& a, const MultiMonomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exp > b.exp;
  }
};

struct Poly {
  uint16_t n = 0;
  uint16_t d = 1;
  std::map<MultiMonomial, Rat, GrlexLess> terms;

  Poly() = default;
  Poly(int n_, int d_) : n(n_), d(d_) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const MultiMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Rat& c);
bool equal(const Poly& p, const Poly& q);

// Action of a permutation of {0..n-1} by permutation of multivariables:
// block i of the argument becomes block sigma[i] of the result.
MultiMonomial permute_blocks(const std::vector<int>& sigma, const MultiMonomial& m);
Poly permute_blocks(const std::vector<int>& sigma, const Poly& p);

// p_alpha = sum_i x_i^alpha, the polarized power sum attached to a
// nonzero multi-exponent alpha in N^d. These generate the multisymmetric
// invariants in characteristic zero (Weyl), and the products m * p_alpha
// span the ideal generated by the positive-degree invariants.
Poly polarized_power_sum(const std::vector<int>& alpha, int n);

// Averaging projection onto the invariants of the Young subgroup
// Sigma_{c_0} x ... x Sigma_{c_r} acting on consecutive blocks.
Poly reynolds(const std::vector<int>& composition, const Poly& p);

// All elements of the Young subgroup given by a composition of n, as
// permutations of {0..n-1}.
std::vector<std::vector<int>> young_subgroup(const std::vector<int>& composition);

// All monomials with the given multidegree, in graded-lex order.
std::vector<MultiMonomial> monomial_basis(int n, int d, const std::vector<int>& multidegree);

}  // namespace weyl::polyring
