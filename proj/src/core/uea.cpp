#include "uea.hpp"

#include <algorithm>
#include <random>

namespace weyl::uea {

FormalCoeff coeff_mul(const FormalCoeff& a, const FormalCoeff& b) {
  FormalCoeff out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

struct Term {
  Int coeff;
  CurrentWord word;
};

// positions holding an e or h whose right neighbour is an f or the vector
void candidates(const CurrentWord& w, std::vector<size_t>& out) {
  out.clear();
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen == Gen::F) continue;
    if (i + 1 == w.size() || w[i + 1].gen == Gen::F) out.push_back(i);
  }
}

}  // namespace

std::map<FProduct, Int> normal_order_apply(const CurrentWord& word, Strategy strategy,
                                           unsigned seed) {
  std::mt19937 rng(seed);
  std::map<FProduct, Int> result;
  std::vector<Term> stack{{Int(1), word}};
  std::vector<size_t> cand;

  while (!stack.empty()) {
    Term t = std::move(stack.back());
    stack.pop_back();

    candidates(t.word, cand);
    if (cand.empty()) {
      // pure f-word: record its unordered product
      FProduct key;
      key.reserve(t.word.size());
      for (const auto& letter : t.word) key.push_back(letter.coeff);
      std::sort(key.begin(), key.end());
      auto [it, fresh] = result.emplace(std::move(key), t.coeff);
      if (!fresh) it->second += t.coeff;
      continue;
    }

    size_t i = strategy == Strategy::Leftmost ? cand.front() : cand[rng() % cand.size()];
    if (i + 1 == t.word.size()) continue;  // e or h meets the vector: term dies

    // commute past the f: L f = f L + [L, f]
    Term swapped{t.coeff, t.word};
    std::swap(swapped.word[i], swapped.word[i + 1]);
    Term bracket;
    bracket.word.reserve(t.word.size() - 1);
    bracket.word.assign(t.word.begin(), t.word.begin() + i);
    FormalCoeff prod = coeff_mul(t.word[i].coeff, t.word[i + 1].coeff);
    if (t.word[i].gen == Gen::E) {
      bracket.coeff = t.coeff;  // [e@P, f@Q] = h@PQ
      bracket.word.push_back({Gen::H, std::move(prod)});
    } else {
      bracket.coeff = t.coeff * -2;  // [h@P, f@Q] = -2 f@PQ
      bracket.word.push_back({Gen::F, std::move(prod)});
    }
    bracket.word.insert(bracket.word.end(), t.word.begin() + i + 2, t.word.end());
    stack.push_back(std::move(swapped));
    stack.push_back(std::move(bracket));
  }

  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

std::vector<CocktailServing> enumerate_servings(int m, int n) {
  if (m < 0 || n < 0) throw UsageError("servings need m, n >= 0");
  std::vector<CocktailServing> out;

  // set partitions of {1..n} into at most m groups, padded by empty glasses
  std::vector<std::vector<int>> groups;
  auto rec = [&](auto&& self, int item) -> void {
    if (static_cast<int>(groups.size()) > m) return;
    if (item > n) {
      CocktailServing s(groups.begin(), groups.end());
      s.resize(m);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      groups[gi].push_back(item);
      self(self, item + 1);
      groups[gi].pop_back();
    }
    groups.push_back({item});
    self(self, item + 1);
    groups.pop_back();
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CurrentWord martini_word(int m, int n) {
  if (m < 0 || n < 0) throw UsageError("martini word needs m, n >= 0");
  CurrentWord w;
  for (int i = 1; i <= n; ++i) w.push_back({Gen::E, {i}});
  for (int j = 0; j < n + m; ++j) w.push_back({Gen::F, {}});
  return w;
}

MartiniReport martini_check(int m, int n) {
  MartiniReport rep;
  rep.m = m;
  rep.n = n;
  rep.table = normal_order_apply(martini_word(m, n));

  auto servings = enumerate_servings(m, n);
  rep.support_matches = rep.table.size() == servings.size() &&
                        std::all_of(servings.begin(), servings.end(), [&](const auto& s) {
                          return rep.table.count(s) > 0;
                        });

  rep.signs_ok = true;
  if (m > 0) {
    int sign = n % 2 == 0 ? 1 : -1;
    for (const auto& [s, c] : rep.table)
      if (sign * c <= 0) rep.signs_ok = false;
  }
  rep.pass = rep.support_matches && rep.signs_ok;
  return rep;
}

AnrReport anr_check(int k) {
  if (k < 1) throw UsageError("anr check needs k >= 1");
  AnrReport rep;
  rep.k = k;
  auto table = normal_order_apply(martini_word(1, k));

  FormalCoeff all;
  for (int i = 1; i <= k; ++i) all.push_back(i);
  FProduct expected{all};

  rep.coeff = table.count(expected) ? table.at(expected) : Int(0);
  int sign = k % 2 == 0 ? 1 : -1;
  rep.pass = table.size() == 1 && rep.coeff != 0 && sign * rep.coeff > 0;
  return rep;
}

}  // namespace weyl::uea
