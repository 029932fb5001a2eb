#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"
#include "sparse.hpp"
#include "weight_character.hpp"

namespace weyl::coinvariants {

struct RankOptions {
  uint64_t p1 = exactla::kDefaultPrimeA;
  uint64_t p2 = exactla::kDefaultPrimeB;
  bool exact = false;          // force rational elimination everywhere
  int max_total_degree = 40;   // hard safety cap; reaching it is an error
  bool verify_stop = false;    // also check that the layer after the stopping layer is zero
};

struct Provenance {
  uint64_t p1 = 0, p2 = 0;
  bool exact = false;
  int escalations = 0;  // graded pieces recomputed over Q after a prime disagreement
  int top_degree = -1;  // highest total degree with a nonzero quotient piece
};

// Multigraded dimension table of a quotient (or of an invariant subspace
// image inside it); zero pieces are not stored.
struct GradedDims {
  int n = 0, d = 1;
  std::map<std::vector<int>, size_t> dims;
  size_t total = 0;
};

// Dimension of the span of { m * p_alpha : deg m + |alpha| = multidegree,
// |alpha| >= 1 } inside the multidegree piece of the polynomial ring,
// computed as a sparse matrix rank.
size_t ideal_piece_dim(int n, int d, const std::vector<int>& multidegree,
                       const RankOptions& opts = {});

// Multigraded dimensions of the quotient of the polynomial ring in n
// multivariables of dimension d by the ideal generated by the
// positive-degree multisymmetric invariants. Pieces are computed by
// increasing total degree until an entire total-degree layer vanishes.
GradedDims coinvariant_dims(int n, int d, const RankOptions& opts = {},
                            Provenance* prov = nullptr);

// Per-multidegree dimension of the image in that quotient of the subspace
// of invariants of the Young subgroup given by the composition.
GradedDims invariant_coinvariant_dims(int n, int d, const std::vector<int>& composition,
                                      const RankOptions& opts = {}, Provenance* prov = nullptr);

// Weight character of the coinvariant model: one invariant-image total
// per composition of n into r+1 parts. Shares one ideal echelon per
// multidegree piece across all compositions.
WeightCharacter origin_character(int n, int d, int r, const RankOptions& opts = {},
                                 Provenance* prov = nullptr);

}  // namespace weyl::coinvariants
