#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"

namespace weyl {

// Character of an sl(r+1)-module graded by compositions (i_0,...,i_r) of
// n; the composition corresponds to the weight (i_0-i_1, ..., i_{r-1}-i_r).
struct WeightCharacter {
  int n = 0;
  int r = 1;
  std::map<std::vector<int>, Int> entries;  // zero entries are not stored

  void add(const std::vector<int>& comp, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = entries.emplace(comp, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) entries.erase(it);
    }
  }

  Int total() const {
    Int t = 0;
    for (const auto& [c, v] : entries) t += v;
    return t;
  }

  Int at(const std::vector<int>& comp) const {
    auto it = entries.find(comp);
    return it == entries.end() ? Int(0) : it->second;
  }

  bool operator==(const WeightCharacter& o) const {
    return n == o.n && r == o.r && entries == o.entries;
  }
};

// Tensor product at character level: convolution of the gradings.
WeightCharacter character_product(const WeightCharacter& a, const WeightCharacter& b);

// All compositions of n into the given number of nonnegative parts,
// in lexicographically decreasing order of the tuple.
std::vector<std::vector<int>> compositions(int n, int parts);

// sl-weight coordinates of a composition: (i_0-i_1, ..., i_{r-1}-i_r).
std::vector<int> sl_weight(const std::vector<int>& comp);

}  // namespace weyl
