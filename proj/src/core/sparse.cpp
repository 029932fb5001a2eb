#include "sparse.hpp"

#include <algorithm>
#include <numeric>

namespace weyl::exactla {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Rows of the matrix with columns renumbered so that ascending id means
// ascending initial column fill: a static Markowitz-style ordering that
// keeps early pivots in the sparsest columns. Rows are sorted shortest
// first for the same reason.
struct PreparedRows {
  std::vector<SparseVec<Rat>> rows;
  size_t cols;
};

PreparedRows prepare(const SparseMatrix& m) {
  std::vector<size_t> col_fill(m.cols(), 0);
  for (const auto& [rc, v] : m.entries()) col_fill[rc.second]++;

  std::vector<uint32_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) { return col_fill[a] < col_fill[b]; });
  std::vector<uint32_t> priority(m.cols());
  for (uint32_t i = 0; i < order.size(); ++i) priority[order[i]] = i;

  PreparedRows out;
  out.cols = m.cols();
  out.rows.assign(m.rows(), {});
  for (const auto& [rc, v] : m.entries())
    out.rows[rc.first].emplace_back(priority[rc.second], v);
  for (auto& row : out.rows) std::sort(row.begin(), row.end());
  std::erase_if(out.rows, [](const auto& r) { return r.empty(); });
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

size_t rank_rational(const PreparedRows& pr) {
  RatEchelon ech(RatOps{}, static_cast<uint32_t>(pr.cols));
  for (const auto& row : pr.rows) {
    if (ech.full()) break;
    ech.insert(row);
  }
  return ech.rank();
}

size_t rank_mod(const PreparedRows& pr, uint64_t p) {
  PrimeField f(p);
  ModEchelon ech(ModOps{f}, static_cast<uint32_t>(pr.cols));
  SparseVec<uint64_t> row;
  for (const auto& src : pr.rows) {
    if (ech.full()) break;
    row.clear();
    for (const auto& [c, v] : src) {
      uint64_t x = f.reduce(v);
      if (x != 0) row.emplace_back(c, x);
    }
    ech.insert(std::move(row));
    row = {};
  }
  return ech.rank();
}

}  // namespace

size_t rank(const SparseMatrix& m, RankMode mode, uint64_t p) {
  PreparedRows pr = prepare(m);
  if (mode == RankMode::Rational) return rank_rational(pr);
  if (!is_prime(p)) throw UsageError("rank: modulus must be prime");
  return rank_mod(pr, p);
}

size_t crosscheck_rank(const SparseMatrix& m, uint64_t p1, uint64_t p2, RankProvenance* prov) {
  if (p1 == p2) throw UsageError("crosscheck_rank: primes must be distinct");
  if (!is_prime(p1) || !is_prime(p2)) throw UsageError("crosscheck_rank: moduli must be prime");

  PreparedRows pr = prepare(m);
  RankProvenance local;
  RankProvenance& pv = prov ? *prov : local;

  auto rank_with_retry = [&](uint64_t p) -> std::pair<bool, size_t> {
    std::vector<uint64_t> candidates{p};
    for (uint64_t q : kFallbackPrimes) candidates.push_back(q);
    for (uint64_t q : candidates) {
      if (std::find(pv.primes_used.begin(), pv.primes_used.end(), q) != pv.primes_used.end())
        continue;
      try {
        size_t r = rank_mod(pr, q);
        pv.primes_used.push_back(q);
        return {true, r};
      } catch (const ReductionError&) {
        pv.reduction_retries++;
      }
    }
    return {false, 0};
  };

  auto [ok1, r1] = rank_with_retry(p1);
  auto [ok2, r2] = rank_with_retry(p2);
  if (ok1 && ok2 && r1 == r2) return r1;

  pv.escalated = true;
  return rank_rational(pr);
}

}  // namespace weyl::exactla
