#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"

namespace weyl::uea {

// Commutative monomial in the formal symbols P_1, ..., P_n: a sorted
// multiset of symbol ids. The empty multiset is the unit.
using FormalCoeff = std::vector<int>;

FormalCoeff coeff_mul(const FormalCoeff& a, const FormalCoeff& b);

enum class Gen { E, H, F };

struct Letter {
  Gen gen = Gen::F;
  FormalCoeff coeff;  // empty means tensoring with 1
  bool operator==(const Letter&) const = default;
};

// A word in U(sl2 tensor A) applied to a vector annihilated by every
// e- and h-letter. Letters act left to right onto the vector.
using CurrentWord = std::vector<Letter>;

// Unordered product of f-letters (f-letters commute): the sorted multiset
// of their coefficients, one entry per letter, empty coeff for f tensor 1.
using FProduct = std::vector<FormalCoeff>;

enum class Strategy {
  Leftmost,    // always rewrite the leftmost e/h that faces an f (or the vector)
  Randomized,  // pick uniformly among all such positions (seeded)
};

// Rewrites the word into a combination of pure f-products applied to the
// vector, using [e@P, f@Q] = h@PQ and [h@P, f@Q] = -2 f@PQ and the
// annihilation rules, and returns the integer coefficient of each
// f-product. Every rewriting order terminates; the strategy parameter
// exists so tests can confirm the result is order-independent.
std::map<FProduct, Int> normal_order_apply(const CurrentWord& word,
                                           Strategy strategy = Strategy::Leftmost,
                                           unsigned seed = 1);

// Distribution of n labeled ingredients into m unlabeled glasses, empty
// glasses allowed: a sorted multiset of m sorted (possibly empty) groups.
using CocktailServing = std::vector<std::vector<int>>;

std::vector<CocktailServing> enumerate_servings(int m, int n);

// The word (e@P_1) ... (e@P_n) f^{n+m}.
CurrentWord martini_word(int m, int n);

struct MartiniReport {
  int m = 0, n = 0;
  std::map<FProduct, Int> table;  // c(S), keyed by the serving
  bool support_matches = false;   // support equals the serving set
  bool signs_ok = false;          // (-1)^n c(S) > 0 whenever m > 0
  bool pass = false;
};

// Expands the martini word and checks that its support is exactly the
// serving set and that every coefficient is an integer of sign (-1)^n.
MartiniReport martini_check(int m, int n);

struct AnrReport {
  int k = 0;
  Int coeff = 0;  // coefficient of f @ P_1...P_k
  bool pass = false;
};

// m = 1 specialization: (e@P_1)...(e@P_k) f^{k+1} is a nonzero multiple
// of f @ P_1...P_k applied to the vector.
AnrReport anr_check(int k);

}  // namespace weyl::uea
