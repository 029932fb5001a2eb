#include "weylmod.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_map>

#include "sparse.hpp"

namespace weyl::weylmod {

using exactla::Echelon;
using exactla::ModOps;
using exactla::PrimeField;
using exactla::RatOps;
using exactla::ReductionError;
using exactla::SparseVec;

WeightCharacter origin_weyl_character(int n, int d, int r, const RankOptions& opts,
                                      Provenance* prov) {
  return coinvariants::origin_character(n, d, r, opts, prov);
}

namespace {

struct TupleHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Finite model of the coordinate algebra on the line truncated at the
// point set, in its clustered form: A / I^N is the product over the
// distinct points z of Q[t] / t^N, with x acting as z + t on the local
// factor. In this basis multiplication by x^k never mixes points.
struct LineAlgebra {
  int N = 0;
  std::vector<Rat> zs;  // distinct locations
  // xk[pt][k][e] = (z_pt + t)^k * t^e in C[t]/t^N, for k = 1..kmax
  std::vector<std::vector<std::vector<SparseVec<Rat>>>> xk;
  std::vector<Rat> eps;  // eps[k] = sum over the multiset of z^k
};

LineAlgebra make_line_algebra(const PointMultiset& pts, int N, int kmax) {
  LineAlgebra la;
  la.N = N;
  for (const auto& p : pts.points) la.zs.push_back(p.at(0));
  std::sort(la.zs.begin(), la.zs.end());
  la.zs.erase(std::unique(la.zs.begin(), la.zs.end()), la.zs.end());

  la.xk.resize(la.zs.size());
  for (size_t pt = 0; pt < la.zs.size(); ++pt) {
    const Rat& z = la.zs[pt];
    la.xk[pt].assign(kmax + 1, {});
    for (int k = 1; k <= kmax; ++k) {
      la.xk[pt][k].resize(N);
      // binomial expansion of (z + t)^k, truncated at t^N
      std::vector<Rat> coef(k + 1);
      Rat c = 1;
      for (int i = 0; i <= k; ++i) {
        Rat zpow = 1;
        for (int m = 0; m < k - i; ++m) zpow *= z;
        coef[i] = c * zpow;
        c = c * (k - i) / (i + 1);
      }
      for (int e = 0; e < N; ++e) {
        SparseVec<Rat> row;
        for (int i = 0; i <= k && e + i < N; ++i)
          if (coef[i] != 0) row.emplace_back(static_cast<uint32_t>(e + i), coef[i]);
        la.xk[pt][k][e] = std::move(row);
      }
    }
  }

  la.eps.assign(kmax + 1, Rat(0));
  for (const auto& p : pts.points) {
    Rat power = 1;
    for (int k = 1; k <= kmax; ++k) {
      power *= p.at(0);
      la.eps[k] += power;
    }
  }
  return la;
}

// One block of a weight component. The component S^{i_0}(B) x ... x
// S^{i_r}(B) splits along the assignment of each factor's elements to
// the distinct points (multiplication operators never move an element
// between points), so the generators of the augmentation ideal act block
// diagonally and ranks add over blocks. A block is a product of slots,
// one per (weight factor, point) pair with a positive count; each slot
// is indexed by weakly decreasing exponent tuples in the local algebra.
struct Block {
  std::vector<std::pair<int, int>> slots;  // (point id, multiset size)
  std::vector<std::vector<std::vector<uint16_t>>> slot_basis;
  std::vector<std::unordered_map<std::vector<uint16_t>, uint32_t, TupleHash>> slot_index;
  std::vector<size_t> stride;
  size_t dim = 1;
};

Block make_block(const std::vector<std::pair<int, int>>& slots, int N) {
  Block blk;
  blk.slots = slots;
  for (const auto& [pt, size] : slots) {
    std::vector<std::vector<uint16_t>> basis;
    std::vector<uint16_t> cur(size);
    auto rec = [&](auto&& self, int slot, int maxe) -> void {
      if (slot == size) {
        basis.push_back(cur);
        return;
      }
      for (int e = maxe; e >= 0; --e) {
        cur[slot] = static_cast<uint16_t>(e);
        self(self, slot + 1, e);
      }
    };
    rec(rec, 0, N - 1);
    std::unordered_map<std::vector<uint16_t>, uint32_t, TupleHash> index;
    for (uint32_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    blk.slot_basis.push_back(std::move(basis));
    blk.slot_index.push_back(std::move(index));
  }
  blk.stride.assign(slots.size(), 1);
  for (int j = static_cast<int>(slots.size()) - 2; j >= 0; --j)
    blk.stride[j] = blk.stride[j + 1] * blk.slot_basis[j + 1].size();
  blk.dim = blk.stride.empty() ? 1 : blk.stride[0] * blk.slot_basis[0].size();
  return blk;
}

// Visits the rows of (T_{x^k} - eps_k) over the block basis for
// k = 1 .. kmax; each row is emitted as a sorted rational sparse vector.
template <class Emit>
void for_each_row(const LineAlgebra& la, const Block& blk, int kmax, Emit&& emit) {
  size_t nf = blk.slots.size();
  std::vector<uint32_t> fidx(nf, 0);
  std::map<uint32_t, Rat> acc;
  std::vector<uint16_t> scratch;

  for (int k = 1; k <= kmax; ++k) {
    std::fill(fidx.begin(), fidx.end(), 0);
    for (size_t b = 0; b < blk.dim; ++b) {
      acc.clear();
      if (la.eps[k] != 0) acc[static_cast<uint32_t>(b)] -= la.eps[k];
      for (size_t fi = 0; fi < nf; ++fi) {
        const auto& tuple = blk.slot_basis[fi][fidx[fi]];
        const auto& table = la.xk[blk.slots[fi].first][k];
        for (size_t slot = 0; slot < tuple.size(); ++slot) {
          for (const auto& [enew, coef] : table[tuple[slot]]) {
            scratch = tuple;
            scratch[slot] = static_cast<uint16_t>(enew);
            std::sort(scratch.rbegin(), scratch.rend());
            uint32_t nidx = blk.slot_index[fi].at(scratch);
            size_t target = b + (size_t(nidx) - fidx[fi]) * blk.stride[fi];
            auto [it, fresh] = acc.emplace(static_cast<uint32_t>(target), coef);
            if (!fresh) {
              it->second += coef;
              if (it->second == 0) acc.erase(it);
            }
          }
        }
      }
      emit(acc);

      // advance the mixed-radix slot indices
      for (size_t fi = nf; fi-- > 0;) {
        if (++fidx[fi] < blk.slot_basis[fi].size()) break;
        fidx[fi] = 0;
      }
    }
  }
}

uint64_t convert(const ModOps& ops, const Rat& v) { return ops.f.reduce(v); }
Rat convert(const RatOps&, const Rat& v) { return v; }

template <class Ops>
size_t block_rank(Ops ops, const LineAlgebra& la, const Block& blk, int kmax) {
  Echelon<Ops> ech(ops, static_cast<uint32_t>(blk.dim));
  typename Echelon<Ops>::Row row;
  bool done = false;
  for_each_row(la, blk, kmax, [&](const std::map<uint32_t, Rat>& acc) {
    if (done) return;
    row.clear();
    for (const auto& [col, v] : acc) {
      auto e = convert(ops, v);
      if (!Ops::is_zero(e)) row.emplace_back(col, std::move(e));
    }
    ech.insert(std::move(row));
    row = {};
    if (ech.full()) done = true;
  });
  return ech.rank();
}

size_t block_quotient_dim(const LineAlgebra& la, const Block& blk, int kmax,
                          const RankOptions& opts, Provenance* prov) {
  if (!opts.exact) {
    auto attempt = [&](uint64_t p) -> std::optional<size_t> {
      try {
        return block_rank(ModOps{PrimeField(p)}, la, blk, kmax);
      } catch (const ReductionError&) {
        return std::nullopt;
      }
    };
    auto fut = std::async(std::launch::async, attempt, opts.p2);
    std::optional<size_t> r1 = attempt(opts.p1);
    std::optional<size_t> r2 = fut.get();

    // a reduction error retries on fallback primes before escalating
    std::vector<uint64_t> used{opts.p1, opts.p2};
    auto refill = [&](std::optional<size_t>& r) {
      for (uint64_t q : exactla::kFallbackPrimes) {
        if (r) return;
        if (std::find(used.begin(), used.end(), q) != used.end()) continue;
        used.push_back(q);
        r = attempt(q);
      }
    };
    refill(r1);
    refill(r2);
    if (r1 && r2 && *r1 == *r2) return blk.dim - *r1;
    if (prov) prov->escalations++;
  }
  return blk.dim - block_rank(RatOps{}, la, blk, kmax);
}

// Quotient dimension of one weight component: the sum of block quotients
// over all assignments of each weight factor's count to the points.
size_t component_quotient_dim(const LineAlgebra& la, const std::vector<int>& comp,
                              const RankOptions& opts, int kmax, Provenance* prov) {
  int npts = static_cast<int>(la.zs.size());
  size_t total = 0;
  std::vector<std::pair<int, int>> slots;
  auto assign = [&](auto&& self, size_t j) -> void {
    if (j == comp.size()) {
      Block blk = make_block(slots, la.N);
      total += block_quotient_dim(la, blk, kmax, opts, prov);
      return;
    }
    std::vector<int> counts(npts, 0);
    auto spread = [&](auto&& inner, int pt, int left) -> void {
      if (pt == npts - 1) {
        counts[pt] = left;
        size_t before = slots.size();
        for (int q = 0; q < npts; ++q)
          if (counts[q] > 0) slots.emplace_back(q, counts[q]);
        self(self, j + 1);
        slots.resize(before);
        counts[pt] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        counts[pt] = v;
        inner(inner, pt + 1, left - v);
        counts[pt] = 0;
      }
    };
    spread(spread, 0, comp[j]);
  };
  assign(assign, 0);
  return total;
}

void require_line(const PointMultiset& pts) {
  if (pts.d != 1)
    throw UnsupportedError("point multisets are only supported on a line (d = 1)");
  for (const auto& p : pts.points)
    if (p.size() != 1) throw UsageError("each point must have exactly d coordinates");
}

}  // namespace

WeightCharacter points_weyl_character(const PointMultiset& pts, int r,
                                      std::optional<int> truncation, const RankOptions& opts,
                                      Provenance* prov) {
  require_line(pts);
  if (r < 1) throw UsageError("need r >= 1");
  int n = pts.n();
  if (prov) {
    prov->p1 = opts.p1;
    prov->p2 = opts.p2;
    prov->exact = opts.exact;
  }

  WeightCharacter wc;
  wc.n = n;
  wc.r = r;
  if (n == 0) {
    wc.add(std::vector<int>(r + 1, 0), 1);
    return wc;
  }

  int N = truncation.value_or(n);
  if (N < n) throw UsageError("truncation order must be at least n");

  LineAlgebra la = make_line_algebra(pts, N, n);
  for (const auto& comp : compositions(n, r + 1)) {
    size_t dim = component_quotient_dim(la, comp, opts, n, prov);
    if (dim > 0) wc.add(comp, Int(static_cast<unsigned long>(dim)));
  }
  return wc;
}

TensorReport verify_tensor_factorization(const PointMultiset& pts, int r,
                                         const RankOptions& opts) {
  require_line(pts);
  TensorReport report;
  report.whole = points_weyl_character(pts, r, {}, opts);

  std::map<Rat, int> groups;
  for (const auto& p : pts.points) groups[p.at(0)]++;

  WeightCharacter product;
  product.n = 0;
  product.r = r;
  product.add(std::vector<int>(r + 1, 0), 1);
  for (const auto& [z, mult] : groups) {
    PointMultiset single;
    single.d = 1;
    single.points.assign(mult, {z});
    TensorFactor factor{z, mult, points_weyl_character(single, r, {}, opts)};
    product = character_product(product, factor.character);
    report.factors.push_back(std::move(factor));
  }
  report.product = std::move(product);
  report.pass = report.whole == report.product;
  return report;
}

bool truncation_stability_check(const PointMultiset& pts, int r, int truncation,
                                const RankOptions& opts) {
  require_line(pts);
  if (truncation < pts.n()) throw UsageError("truncation order must be at least n");
  WeightCharacter at_n = points_weyl_character(pts, r, truncation, opts);
  WeightCharacter at_n1 = points_weyl_character(pts, r, truncation + 1, opts);
  return at_n == at_n1;
}

}  // namespace weyl::weylmod
