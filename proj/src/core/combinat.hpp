#pragma once

#include <vector>

#include "numeric.hpp"
#include "weight_character.hpp"

namespace weyl::combinat {

// f: {1..n} -> {1..n} with |f^{-1}({1..k})| >= k for all k.
using ParkingFunction = std::vector<int>;

// (a_1,...,a_n), a_i >= 0, sum = n, prefix sums a_1+...+a_k >= k.
using ASequence = std::vector<int>;

// n-subset H of {1..s*n} with |H intersect {1..k}| >= k/s for all k;
// equivalently the j-th smallest element is at most s*(j-1)+1.
struct RaneySet {
  std::vector<int> h;  // increasing
  int n = 0;
  int s = 2;
  bool operator==(const RaneySet& o) const { return h == o.h && n == o.n && s == o.s; }
};

Int factorial(int n);
Int binomial(int n, int k);

std::vector<ParkingFunction> enumerate_parking_functions(int n);
std::vector<ASequence> enumerate_A(int n);
std::vector<RaneySet> enumerate_raney(int n, int s);

// For each composition (i_0,...,i_r) of n: the number of H in the Raney
// family R_{n+1}^{r+1} with exactly i_j elements congruent to j+1 modulo
// r+1, for j = 1..r (i_0 makes the total n).
WeightCharacter raney_weight_census(int n, int r);

Int catalan(int n);                       // (2n+2)! / ((n+1)! (n+2)!)
Int narayana(int n, int i);               // (n+1)! n! / ((n-i+1)!(n-i)!(i+1)! i!)
Int higher_catalan(int n, int r);         // ((r+1)(n+1))! / ((n+1)! (r(n+1)+1)!)
Int hoggatt_conjecture_dim(int n, int i, int d);

}  // namespace weyl::combinat
