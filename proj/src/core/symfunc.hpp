#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"
#include "weight_character.hpp"

namespace weyl::symfunc {

// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(int n);
bool dominates(const Partition& a, const Partition& b);

// Number of semistandard Young tableaux of the given shape and content,
// by horizontal-strip recursion. The content may be any composition
// (Kostka numbers are symmetric in the content). Memoized internally.
long kostka(const Partition& shape, const std::vector<int>& content);

enum class Basis { h, e, s, m };

// Homogeneous symmetric function: partition-indexed rational coefficients
// tagged with a basis label.
struct SymFuncExpr {
  Basis basis = Basis::h;
  int degree = 0;
  std::map<Partition, Rat> coeffs;  // zero coefficients not stored

  void add(const Partition& p, const Rat& c);
};

SymFuncExpr h_to_schur(const SymFuncExpr& x);  // h_mu = sum_lambda K_{lambda mu} s_lambda
SymFuncExpr e_to_schur(const SymFuncExpr& x);  // e_mu = sum_lambda K_{lambda' mu} s_lambda
SymFuncExpr to_schur(const SymFuncExpr& x);    // from any basis tag

// The omega involution (tensoring with the sign representation on the
// symmetric-group side): swaps h and e, conjugates Schur indices.
SymFuncExpr tensor_sign(const SymFuncExpr& x);

// Frobenius image of the parking-function permutation module: the sum of
// h indexed by the sorted nonzero entries of each admissible sequence.
SymFuncExpr parking_frobenius(int n);

// Dimension of the Sigma_n module with this Frobenius image.
Int dimension(const SymFuncExpr& x);

// Multiplicity list of sl(r+1) irreducibles, keyed by highest weight in
// fundamental-weight coordinates (an r-tuple).
struct IrrepList {
  int r = 1;
  std::map<std::vector<int>, Int> entries;
};

// Image of a genuine Sigma_n module (s-basis, nonnegative integer
// coefficients): partitions with more than r+1 rows are dropped, the rest
// map to (xi_1-xi_2, ..., xi_r-xi_{r+1}).
IrrepList frobenius_transform(const SymFuncExpr& x, int r);

// Weight multiplicities of the sl(r+1) irreducible with the given highest
// weight, graded by compositions of `level` (default: the minimal level);
// entries are Kostka numbers of the associated shape.
WeightCharacter irrep_weight_character(int r, const std::vector<int>& hw, int level = -1);

Int irrep_dim(int r, const std::vector<int>& hw);

// Weight character of the sl(r+1)-module obtained from an s-basis
// expression with nonnegative integer coefficients.
WeightCharacter frobenius_weight_character(const SymFuncExpr& x, int r);

}  // namespace weyl::symfunc
