#include "weight_character.hpp"

namespace weyl {

WeightCharacter character_product(const WeightCharacter& a, const WeightCharacter& b) {
  if (a.r != b.r) throw UsageError("character product: rank mismatch");
  WeightCharacter out;
  out.n = a.n + b.n;
  out.r = a.r;
  for (const auto& [ca, va] : a.entries)
    for (const auto& [cb, vb] : b.entries) {
      std::vector<int> c(ca.size());
      for (size_t j = 0; j < c.size(); ++j) c[j] = ca[j] + cb[j];
      out.add(c, va * vb);
    }
  return out;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  if (n < 0 || parts < 0) throw UsageError("compositions: negative arguments");
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<int> sl_weight(const std::vector<int>& comp) {
  std::vector<int> w;
  for (size_t j = 0; j + 1 < comp.size(); ++j) w.push_back(comp[j] - comp[j + 1]);
  return w;
}

}  // namespace weyl
