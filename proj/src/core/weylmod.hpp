#pragma once

#include <optional>
#include <vector>

#include "coinvariants.hpp"
#include "numeric.hpp"
#include "weight_character.hpp"

namespace weyl::weylmod {

using coinvariants::Provenance;
using coinvariants::RankOptions;

// n points in Q^d with repetitions allowed; all attached to the first
// fundamental weight, so the module's highest weight is n omega_1.
struct PointMultiset {
  int d = 1;
  std::vector<std::vector<Rat>> points;

  int n() const { return static_cast<int>(points.size()); }
};

// Character of the local Weyl module at the origin of C^d for sl(r+1)
// with highest weight n omega_1, through the coinvariant model.
WeightCharacter origin_weyl_character(int n, int d, int r, const RankOptions& opts = {},
                                      Provenance* prov = nullptr);

// Character of the local Weyl module at an arbitrary point multiset on a
// line: the n-th symmetric power of (A/I^N) tensor the vector
// representation, cut by the evaluation augmentation ideal acting through
// its degree-one generators. N defaults to n, which is sufficient for
// highest weight n omega_1; truncation_stability_check certifies it.
WeightCharacter points_weyl_character(const PointMultiset& pts, int r,
                                      std::optional<int> truncation = {},
                                      const RankOptions& opts = {}, Provenance* prov = nullptr);

struct TensorFactor {
  Rat location;
  int multiplicity = 0;
  WeightCharacter character;
};

struct TensorReport {
  bool pass = false;
  WeightCharacter whole;
  WeightCharacter product;
  std::vector<TensorFactor> factors;
};

// Groups the multiset by location, computes each group's character and
// the whole character, and checks that the whole factorizes as the
// product (dimension and every weight multiplicity).
TensorReport verify_tensor_factorization(const PointMultiset& pts, int r,
                                         const RankOptions& opts = {});

// True when the character is unchanged under N -> N + 1.
bool truncation_stability_check(const PointMultiset& pts, int r, int truncation,
                                const RankOptions& opts = {});

}  // namespace weyl::weylmod
