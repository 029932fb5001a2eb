#include "polyring.hpp"

#include <algorithm>
#include <numeric>

namespace weyl::polyring {

namespace {

void require_match(const Poly& p, const Poly& q) {
  if (p.n != q.n || p.d != q.d) throw UsageError("polynomials live in different rings");
}

}  // namespace

Poly add(const Poly& p, const Poly& q) {
  require_match(p, q);
  Poly r = p;
  for (const auto& [m, c] : q.terms) r.add_term(m, c);
  return r;
}

Poly sub(const Poly& p, const Poly& q) {
  require_match(p, q);
  Poly r = p;
  for (const auto& [m, c] : q.terms) r.add_term(m, -c);
  return r;
}

Poly mul(const Poly& p, const Poly& q) {
  require_match(p, q);
  Poly r(p.n, p.d);
  for (const auto& [ma, ca] : p.terms) {
    for (const auto& [mb, cb] : q.terms) {
      MultiMonomial m(p.n, p.d);
      for (size_t i = 0; i < m.exp.size(); ++i)
        m.exp[i] = static_cast<uint16_t>(ma.exp[i] + mb.exp[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly scale(const Poly& p, const Rat& c) {
  Poly r(p.n, p.d);
  if (c == 0) return r;
  for (const auto& [m, v] : p.terms) r.terms.emplace(m, v * c);
  return r;
}

bool equal(const Poly& p, const Poly& q) {
  return p.n == q.n && p.d == q.d && p.terms == q.terms;
}

MultiMonomial permute_blocks(const std::vector<int>& sigma, const MultiMonomial& m) {
  MultiMonomial r(m.n, m.d);
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < m.d; ++k) r.at(sigma[i], k) = m.at(i, k);
  return r;
}

Poly permute_blocks(const std::vector<int>& sigma, const Poly& p) {
  if (sigma.size() != p.n) throw UsageError("permutation length != number of blocks");
  Poly r(p.n, p.d);
  for (const auto& [m, c] : p.terms) r.add_term(permute_blocks(sigma, m), c);
  return r;
}

Poly polarized_power_sum(const std::vector<int>& alpha, int n) {
  int weight = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (weight < 1) throw UsageError("polarized power sum needs |alpha| >= 1");
  int d = static_cast<int>(alpha.size());
  Poly r(n, d);
  for (int i = 0; i < n; ++i) {
    MultiMonomial m(n, d);
    for (int k = 0; k < d; ++k) m.at(i, k) = static_cast<uint16_t>(alpha[k]);
    r.add_term(m, 1);
  }
  return r;
}

std::vector<std::vector<int>> young_subgroup(const std::vector<int>& composition) {
  std::vector<std::vector<int>> result{{}};
  int offset = 0;
  for (int part : composition) {
    if (part < 0) throw UsageError("composition parts must be nonnegative");
    std::vector<int> block(part);
    std::iota(block.begin(), block.end(), offset);
    std::vector<std::vector<int>> extended;
    do {
      for (const auto& base : result) {
        std::vector<int> perm = base;
        perm.insert(perm.end(), block.begin(), block.end());
        extended.push_back(std::move(perm));
      }
    } while (std::next_permutation(block.begin(), block.end()));
    result = std::move(extended);
    offset += part;
  }
  return result;
}

Poly reynolds(const std::vector<int>& composition, const Poly& p) {
  int total = std::accumulate(composition.begin(), composition.end(), 0);
  if (total != p.n) throw UsageError("composition does not sum to the number of blocks");
  auto group = young_subgroup(composition);
  Poly acc(p.n, p.d);
  for (const auto& g : group) acc = add(acc, permute_blocks(g, p));
  return scale(acc, make_rat(1, Int(static_cast<unsigned long>(group.size()))));
}

namespace {

void enumerate_rec(int n, int d, int block, std::vector<int>& budget, MultiMonomial& cur,
                   std::vector<MultiMonomial>& out) {
  if (block == n) {
    bool done = std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; });
    if (done) out.push_back(cur);
    return;
  }
  if (block == n - 1) {
    // last block absorbs the remaining budget
    for (int k = 0; k < d; ++k) cur.at(block, k) = static_cast<uint16_t>(budget[k]);
    std::vector<int> zero(d, 0);
    std::swap(budget, zero);
    enumerate_rec(n, d, block + 1, budget, cur, out);
    std::swap(budget, zero);
    for (int k = 0; k < d; ++k) cur.at(block, k) = 0;
    return;
  }
  // per-coordinate exponents of this block, descending for graded-lex order
  std::vector<int> row(d, 0);
  auto walk = [&](auto&& self, int k) -> void {
    if (k == d) {
      enumerate_rec(n, d, block + 1, budget, cur, out);
      return;
    }
    for (int e = budget[k]; e >= 0; --e) {
      row[k] = e;
      cur.at(block, k) = static_cast<uint16_t>(e);
      budget[k] -= e;
      self(self, k + 1);
      budget[k] += e;
      cur.at(block, k) = 0;
    }
  };
  walk(walk, 0);
}

}  // namespace

std::vector<MultiMonomial> monomial_basis(int n, int d, const std::vector<int>& multidegree) {
  if (static_cast<int>(multidegree.size()) != d) throw UsageError("multidegree length != d");
  for (int m : multidegree)
    if (m < 0) throw UsageError("negative multidegree");
  std::vector<MultiMonomial> out;
  if (n == 0) {
    if (std::all_of(multidegree.begin(), multidegree.end(), [](int m) { return m == 0; }))
      out.emplace_back(0, d);
    return out;
  }
  std::vector<int> budget = multidegree;
  MultiMonomial cur(n, d);
  enumerate_rec(n, d, 0, budget, cur, out);
  return out;
}

}  // namespace weyl::polyring
