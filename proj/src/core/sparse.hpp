#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace weyl::exactla {

// Deterministic default primes near 2^31 for modular rank computations,
// plus fallbacks used when a prime divides a denominator of some entry.
inline constexpr uint64_t kDefaultPrimeA = 2147483647;  // 2^31 - 1
inline constexpr uint64_t kDefaultPrimeB = 2147483629;
inline constexpr uint64_t kFallbackPrimes[] = {2147483587, 2147483579, 2147483563,
                                               2147483549, 2147483543, 2147483497};

// A sparse vector sorted by column id. Column ids are expected to be
// pre-mapped so that ascending id equals descending pivot priority.
template <class T>
using SparseVec = std::vector<std::pair<uint32_t, T>>;

struct RatOps {
  using Elem = Rat;
  static bool is_zero(const Elem& x) { return x == 0; }
  static Elem neg(const Elem& x) { return -x; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem inv(const Elem& x) { return 1 / x; }
  static Elem one() { return Rat(1); }
  static Elem zero() { return Rat(0); }
};

struct ModOps {
  PrimeField f;
  using Elem = uint64_t;
  static bool is_zero(Elem x) { return x == 0; }
  Elem neg(Elem x) const { return f.neg(x); }
  Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
  Elem add(Elem a, Elem b) const { return f.add(a, b); }
  Elem inv(Elem x) const { return f.inv(x); }
  static Elem one() { return 1; }
  static Elem zero() { return 0; }
};

// Incremental row-echelon structure: rows are reduced against existing
// pivot rows (matched by leading column) and inserted if nonzero. Rows
// already stored are never modified, so insertions can be rolled back,
// which lets callers count the residual rank of extra rows on top of a
// shared echelon without copying it.
//
// An optional generator can supply "implicit" pivot rows synthesized on
// demand from the leading column. Such rows are known a priori to have
// pairwise distinct leads and to never require reduction themselves;
// they are counted into the rank without being stored.
template <class Ops>
class Echelon {
 public:
  using Elem = typename Ops::Elem;
  using Row = SparseVec<Elem>;

  Echelon(Ops ops, uint32_t cols) : ops_(std::move(ops)), cols_(cols) {}

  void set_implicit(std::function<bool(uint32_t lead, Row& out)> gen, size_t count) {
    implicit_ = std::move(gen);
    implicit_count_ = count;
  }

  // Reduces v against the echelon and inserts the remainder if nonzero.
  // Returns true when the rank grew.
  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    normalize(v);
    uint32_t lead = v.front().first;
    inserted_leads_.push_back(lead);
    rows_.emplace(lead, std::move(v));
    return true;
  }

  // Fully reduces v in place (does not insert). Works through a dense
  // accumulator: columns are retired by an ascending cursor scan (pivot
  // tails only ever scatter to the right of their lead), and a pivot hit
  // costs one scatter of the pivot's tail.
  void reduce(Row& v) const {
    if (acc_.size() != cols_) acc_.assign(cols_, Ops::zero());
    if (v.empty()) return;
    uint32_t cursor = v.front().first;
    for (auto& [c, val] : v) acc_[c] = std::move(val);

    Row generated;
    scratch_.clear();
    for (uint32_t c = cursor; c < cols_; ++c) {
      if (Ops::is_zero(acc_[c])) continue;
      Elem val = std::move(acc_[c]);
      acc_[c] = Ops::zero();

      const Row* pivot = nullptr;
      if (implicit_ && implicit_(c, generated)) {
        pivot = &generated;
      } else if (auto it = rows_.find(c); it != rows_.end()) {
        pivot = &it->second;
      }
      if (!pivot) {
        scratch_.emplace_back(c, std::move(val));
        continue;
      }
      // acc -= val * pivot; the lead entry cancels exactly
      Elem f = ops_.neg(val);
      for (size_t i = 1; i < pivot->size(); ++i)
        acc_[(*pivot)[i].first] =
            ops_.add(acc_[(*pivot)[i].first], ops_.mul(f, (*pivot)[i].second));
    }
    v.swap(scratch_);
  }

  size_t rank() const { return rows_.size() + implicit_count_; }
  size_t stored() const { return rows_.size(); }
  uint32_t cols() const { return cols_; }
  bool full() const { return rank() >= cols_; }

  size_t mark() const { return inserted_leads_.size(); }
  void rollback(size_t mark) {
    while (inserted_leads_.size() > mark) {
      rows_.erase(inserted_leads_.back());
      inserted_leads_.pop_back();
    }
  }

 private:
  void normalize(Row& v) const {
    if (v.empty() || Ops::is_zero(v.front().second)) return;
    Elem s = ops_.inv(v.front().second);
    for (auto& [col, val] : v) val = ops_.mul(val, s);
  }

  Ops ops_;
  uint32_t cols_;
  std::unordered_map<uint32_t, Row> rows_;
  std::vector<uint32_t> inserted_leads_;
  std::function<bool(uint32_t, Row&)> implicit_;
  size_t implicit_count_ = 0;
  mutable Row scratch_;
  mutable std::vector<Elem> acc_;
};

using RatEchelon = Echelon<RatOps>;
using ModEchelon = Echelon<ModOps>;

// Sparse matrix over the rationals; only nonzero entries are stored.
class SparseMatrix {
 public:
  SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {}

  void set(size_t r, size_t c, Rat v) {
    if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of bounds");
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }

  Rat get(size_t r, size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::map<std::pair<size_t, size_t>, Rat>& entries() const { return entries_; }

 private:
  size_t rows_, cols_;
  std::map<std::pair<size_t, size_t>, Rat> entries_;
};

enum class RankMode { Rational, Prime };

// Rank over Q or over F_p. Prime mode throws ReductionError when p divides
// the denominator of an entry; the result is always <= the rational rank,
// with equality overwhelmingly likely for entries that are reductions of
// small rationals.
size_t rank(const SparseMatrix& m, RankMode mode, uint64_t p = 0);

struct RankProvenance {
  std::vector<uint64_t> primes_used;
  bool escalated = false;
  int reduction_retries = 0;
};

// Computes the rank modulo two distinct primes and returns the common
// value; on disagreement (or if the fallback primes are exhausted by
// reduction errors) escalates to exact rational elimination.
size_t crosscheck_rank(const SparseMatrix& m, uint64_t p1, uint64_t p2,
                       RankProvenance* prov = nullptr);

}  // namespace weyl::exactla
