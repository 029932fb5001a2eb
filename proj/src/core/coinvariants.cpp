#include "coinvariants.hpp"

#include <future>
#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "polyring.hpp"

namespace weyl::coinvariants {

using exactla::Echelon;
using exactla::ModOps;
using exactla::PrimeField;
using exactla::RatOps;
using polyring::MultiMonomial;

namespace {

struct VecHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Shared, field-independent data for one multidegree piece.
//
// The ideal piece is spanned by
//   (a) m * p_{e1} for every monomial m of multidegree mu - e1, and
//   (b) m * p_alpha for alpha != e1, |alpha| <= min(n, |mu|), with m not
//       divisible by the first coordinate v of the first block.
// Family (a) has pairwise distinct leading monomials m*v under a column
// order that ranks higher v-exponent first, and is never itself reduced;
// it is synthesized on demand instead of stored. Family (b) is justified
// by passing to the quotient by the linear form p_{e1}, where v is
// eliminated and the remaining generators only need v-free cofactors;
// the bound |alpha| <= n is Weyl's degree bound for the polarized power
// sums generating the multisymmetric invariants in characteristic zero.
// Each family-(b) row is stored with v already substituted by
// -(v_1 + ... + v_{n-1}) -- a row operation against family (a) -- so its
// reduction only ever meets stored v-free pivots.
struct PieceWorkspace {
  int n = 0, d = 1;
  std::vector<int> mu;
  std::vector<MultiMonomial> basis;
  std::unordered_map<std::vector<uint16_t>, uint32_t, VecHash> index;
  std::vector<uint32_t> prio_of_idx, idx_of_prio;
  size_t implicit_count = 0;
  std::vector<exactla::SparseVec<long long>> ideal_rows;  // sorted by column priority
};

int vexp(const MultiMonomial& m) { return m.n > 0 ? m.at(0, 0) : 0; }

PieceWorkspace make_workspace(int n, int d, const std::vector<int>& mu) {
  PieceWorkspace ws;
  ws.n = n;
  ws.d = d;
  ws.mu = mu;
  ws.basis = polyring::monomial_basis(n, d, mu);
  for (uint32_t i = 0; i < ws.basis.size(); ++i) ws.index.emplace(ws.basis[i].exp, i);

  // column priority: descending v-exponent, then graded-lex position
  std::vector<uint32_t> order(ws.basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return vexp(ws.basis[a]) > vexp(ws.basis[b]);
  });
  ws.idx_of_prio = order;
  ws.prio_of_idx.resize(order.size());
  for (uint32_t p = 0; p < order.size(); ++p) ws.prio_of_idx[order[p]] = p;

  if (n == 0) return ws;

  int total = std::accumulate(mu.begin(), mu.end(), 0);
  if (total == 0) return ws;

  ws.implicit_count = mu[0] >= 1
                          ? polyring::monomial_basis(n, d, [&] {
                              auto m = mu;
                              m[0] -= 1;
                              return m;
                            }()).size()
                          : 0;

  // explicit generator rows, smallest |alpha| first
  int maxw = std::min(n, total);
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur(d, 0);
  auto gen_alpha = [&](auto&& self, int k, int left) -> void {
    if (k == d) {
      int w = std::accumulate(cur.begin(), cur.end(), 0);
      if (w >= 1) alphas.push_back(cur);
      return;
    }
    for (int e = 0; e <= std::min(left, mu[k]); ++e) {
      cur[k] = e;
      self(self, k + 1, left - e);
      cur[k] = 0;
    }
  };
  gen_alpha(gen_alpha, 0, maxw);
  std::stable_sort(alphas.begin(), alphas.end(), [](const auto& a, const auto& b) {
    int wa = std::accumulate(a.begin(), a.end(), 0);
    int wb = std::accumulate(b.begin(), b.end(), 0);
    return wa != wb ? wa < wb : a < b;
  });

  std::vector<int> e1(d, 0);
  e1[0] = 1;
  std::vector<uint16_t> prod;
  for (const auto& alpha : alphas) {
    if (alpha == e1) continue;

    // q_alpha = p_alpha with v := -(v_1 + ... + v_{n-1}), as exponent
    // tables over the n blocks with merged integer coefficients
    std::map<std::vector<uint16_t>, long long> q;
    for (int i = 1; i < n; ++i) {
      std::vector<uint16_t> t(size_t(n) * d, 0);
      for (int k = 0; k < d; ++k) t[size_t(i) * d + k] = static_cast<uint16_t>(alpha[k]);
      q[t] += 1;
    }
    {
      int a = alpha[0];
      long long sign = a % 2 == 0 ? 1 : -1;
      std::vector<uint16_t> t(size_t(n) * d, 0);
      for (int k = 1; k < d; ++k) t[k] = static_cast<uint16_t>(alpha[k]);  // block-0 tail
      if (a == 0) {
        q[t] += 1;
      } else if (n >= 2) {
        // spread v^a over the coordinate-0 slots of blocks 1..n-1 with
        // multinomial coefficients; for n = 1 the substitution kills it
        auto spread = [&](auto&& self, int block, int left, long long multinom) -> void {
          if (block == n - 1) {
            t[size_t(n - 1) * d] = static_cast<uint16_t>(left);
            q[t] += sign * multinom;
            t[size_t(n - 1) * d] = 0;
            return;
          }
          long long binom = 1;
          for (int c = 0; c <= left; ++c) {
            if (c > 0) binom = binom * (left - c + 1) / c;  // running C(left, c)
            t[size_t(block) * d] = static_cast<uint16_t>(c);
            self(self, block + 1, left - c, multinom * binom);
            t[size_t(block) * d] = 0;
          }
        };
        spread(spread, 1, a, 1);
      }
      std::erase_if(q, [](const auto& kv) { return kv.second == 0; });
    }

    std::vector<int> rest(d);
    for (int k = 0; k < d; ++k) rest[k] = mu[k] - alpha[k];
    for (const auto& m : polyring::monomial_basis(n, d, rest)) {
      if (vexp(m) != 0) continue;
      exactla::SparseVec<long long> row;
      row.reserve(q.size());
      for (const auto& [t, coef] : q) {
        prod = m.exp;
        for (size_t j = 0; j < prod.size(); ++j)
          prod[j] = static_cast<uint16_t>(prod[j] + t[j]);
        row.emplace_back(ws.prio_of_idx[ws.index.at(prod)], coef);
      }
      std::sort(row.begin(), row.end());
      if (!row.empty()) ws.ideal_rows.push_back(std::move(row));
    }
  }
  return ws;
}

// Orbit-sum rows of the monomial basis under the Young subgroup acting on
// consecutive blocks: one row per orbit, one entry per orbit member.
std::vector<std::vector<uint32_t>> orbit_rows(const PieceWorkspace& ws,
                                              const std::vector<int>& comp) {
  std::vector<std::vector<uint32_t>> rows;
  std::vector<bool> seen(ws.basis.size(), false);
  std::vector<std::pair<int, int>> groups;  // [begin, end) block ranges
  int off = 0;
  for (int part : comp) {
    groups.emplace_back(off, off + part);
    off += part;
  }

  for (uint32_t b = 0; b < ws.basis.size(); ++b) {
    if (seen[b]) continue;
    const MultiMonomial& m = ws.basis[b];

    // block rows per group, each sorted ascending for next_permutation
    std::vector<std::vector<std::vector<uint16_t>>> arrangements(groups.size());
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      auto [lo, hi] = groups[gi];
      std::vector<uint16_t> blocks_flat;
      std::vector<std::vector<uint16_t>> blocks;
      for (int i = lo; i < hi; ++i)
        blocks.emplace_back(m.exp.begin() + size_t(i) * ws.d,
                            m.exp.begin() + size_t(i + 1) * ws.d);
      std::sort(blocks.begin(), blocks.end());
      do {
        for (const auto& blk : blocks) arrangements[gi].push_back(blk);
        arrangements[gi].push_back({});  // separator
      } while (std::next_permutation(blocks.begin(), blocks.end()));
    }

    // cartesian product over groups
    std::vector<uint32_t> members;
    std::vector<uint16_t> exp(m.exp.size());
    auto rec = [&](auto&& self, size_t gi) -> void {
      if (gi == groups.size()) {
        members.push_back(ws.index.at(exp));
        return;
      }
      auto [lo, hi] = groups[gi];
      int len = hi - lo;
      const auto& arr = arrangements[gi];
      size_t pos = 0;
      while (pos < arr.size()) {
        for (int i = 0; i < len; ++i)
          std::copy(arr[pos + i].begin(), arr[pos + i].end(),
                    exp.begin() + size_t(lo + i) * ws.d);
        self(self, gi + 1);
        pos += len + 1;  // skip separator
      }
    };
    rec(rec, 0);

    std::vector<uint32_t> row;
    row.reserve(members.size());
    for (uint32_t idx : members) {
      seen[idx] = true;
      row.push_back(ws.prio_of_idx[idx]);
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

struct PieceDims {
  size_t quotient = 0;
  std::vector<size_t> comp_dims;
  bool operator==(const PieceDims&) const = default;
};

uint64_t from_ll(const ModOps& ops, long long v) {
  long long m = v % static_cast<long long>(ops.f.p);
  if (m < 0) m += static_cast<long long>(ops.f.p);
  return static_cast<uint64_t>(m);
}
Rat from_ll(const RatOps&, long long v) { return Rat(static_cast<long>(v)); }

template <class Ops>
PieceDims run_piece(Ops ops, const PieceWorkspace& ws,
                    const std::vector<std::vector<std::vector<uint32_t>>>& comps) {
  using Elem = typename Ops::Elem;
  Echelon<Ops> ech(ops, static_cast<uint32_t>(ws.basis.size()));

  if (ws.implicit_count > 0) {
    const int n = ws.n, d = ws.d;
    ech.set_implicit(
        [&ws, n, d](uint32_t lead, typename Echelon<Ops>::Row& out) {
          const MultiMonomial& u = ws.basis[ws.idx_of_prio[lead]];
          if (vexp(u) == 0) return false;
          out.clear();
          std::vector<uint16_t> prod = u.exp;
          prod[0] -= 1;  // m = u / v
          for (int i = 0; i < n; ++i) {
            prod[size_t(i) * d] += 1;
            out.emplace_back(ws.prio_of_idx[ws.index.at(prod)], Ops::one());
            prod[size_t(i) * d] -= 1;
          }
          std::sort(out.begin(), out.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          return true;
        },
        ws.implicit_count);
  }

  typename Echelon<Ops>::Row row;
  for (const auto& src : ws.ideal_rows) {
    if (ech.full()) break;
    row.clear();
    for (const auto& [c, coef] : src) {
      Elem e = from_ll(ops, coef);
      if (!Ops::is_zero(e)) row.emplace_back(c, std::move(e));
    }
    ech.insert(std::move(row));
    row = {};
  }

  PieceDims out;
  out.quotient = ws.basis.size() - ech.rank();
  for (const auto& rows : comps) {
    if (out.quotient == 0) {
      out.comp_dims.push_back(0);
      continue;
    }
    size_t mark = ech.mark();
    size_t dim = 0;
    for (const auto& ids : rows) {
      row.clear();
      for (uint32_t c : ids) row.emplace_back(c, Ops::one());
      if (ech.insert(std::move(row))) ++dim;
      row = {};
    }
    ech.rollback(mark);
    out.comp_dims.push_back(dim);
  }
  return out;
}

PieceDims compute_piece(const PieceWorkspace& ws,
                        const std::vector<std::vector<std::vector<uint32_t>>>& comps,
                        const RankOptions& opts, Provenance* prov) {
  if (!opts.exact) {
    // the two prime runs only read the shared workspace
    auto second = std::async(std::launch::async, [&] {
      return run_piece(ModOps{PrimeField(opts.p2)}, ws, comps);
    });
    PieceDims a = run_piece(ModOps{PrimeField(opts.p1)}, ws, comps);
    PieceDims b = second.get();
    if (a == b) return a;
    if (prov) prov->escalations++;
  }
  return run_piece(RatOps{}, ws, comps);
}

struct SweepResult {
  // per composition: multidegree -> dim
  std::vector<std::map<std::vector<int>, size_t>> comp_dims;
  std::map<std::vector<int>, size_t> quotient;
  int top_degree = -1;
};

SweepResult sweep(int n, int d, const std::vector<std::vector<int>>& comps,
                  const RankOptions& opts, Provenance* prov) {
  if (n < 0 || d < 1) throw UsageError("need n >= 0 and d >= 1");
  if (!exactla::is_prime(opts.p1) || !exactla::is_prime(opts.p2) || opts.p1 == opts.p2)
    throw UsageError("rank options need two distinct primes");
  if (prov) {
    prov->p1 = opts.p1;
    prov->p2 = opts.p2;
    prov->exact = opts.exact;
  }

  SweepResult res;
  res.comp_dims.resize(comps.size());

  auto layer_total = [&](int g, bool record) {
    size_t total = 0;
    for (const auto& mu : compositions(g, d)) {
      PieceWorkspace ws = make_workspace(n, d, mu);
      if (ws.basis.empty()) continue;
      std::vector<std::vector<std::vector<uint32_t>>> comp_rows;
      comp_rows.reserve(comps.size());
      for (const auto& c : comps) comp_rows.push_back(orbit_rows(ws, c));
      PieceDims dims = compute_piece(ws, comp_rows, opts, prov);
      total += dims.quotient;
      if (record) {
        if (dims.quotient > 0) res.quotient[mu] = dims.quotient;
        for (size_t ci = 0; ci < comps.size(); ++ci)
          if (dims.comp_dims[ci] > 0) res.comp_dims[ci][mu] = dims.comp_dims[ci];
      }
    }
    return total;
  };

  for (int g = 0;; ++g) {
    if (g > opts.max_total_degree)
      throw ResourceCapError("total degree cap reached before the quotient vanished");
    size_t total = layer_total(g, true);
    if (total == 0) {
      res.top_degree = g - 1;
      if (opts.verify_stop && layer_total(g + 1, false) != 0)
        throw std::logic_error("stopping rule violated: nonzero layer after a zero layer");
      break;
    }
  }
  if (prov) prov->top_degree = res.top_degree;
  return res;
}

}  // namespace

size_t ideal_piece_dim(int n, int d, const std::vector<int>& multidegree,
                       const RankOptions& opts) {
  if (static_cast<int>(multidegree.size()) != d) throw UsageError("multidegree length != d");
  PieceWorkspace ws = make_workspace(n, d, multidegree);
  if (ws.basis.empty()) return 0;
  Provenance prov;
  PieceDims dims = compute_piece(ws, {}, opts, &prov);
  return ws.basis.size() - dims.quotient;
}

GradedDims coinvariant_dims(int n, int d, const RankOptions& opts, Provenance* prov) {
  SweepResult res = sweep(n, d, {}, opts, prov);
  GradedDims out;
  out.n = n;
  out.d = d;
  out.dims = std::move(res.quotient);
  for (const auto& [mu, v] : out.dims) out.total += v;
  return out;
}

GradedDims invariant_coinvariant_dims(int n, int d, const std::vector<int>& composition,
                                      const RankOptions& opts, Provenance* prov) {
  int sum = std::accumulate(composition.begin(), composition.end(), 0);
  if (sum != n) throw UsageError("composition must sum to n");
  for (int part : composition)
    if (part < 0) throw UsageError("composition parts must be nonnegative");
  SweepResult res = sweep(n, d, {composition}, opts, prov);
  GradedDims out;
  out.n = n;
  out.d = d;
  out.dims = std::move(res.comp_dims[0]);
  for (const auto& [mu, v] : out.dims) out.total += v;
  return out;
}

WeightCharacter origin_character(int n, int d, int r, const RankOptions& opts,
                                 Provenance* prov) {
  if (r < 1) throw UsageError("need r >= 1");
  auto comps = compositions(n, r + 1);
  SweepResult res = sweep(n, d, comps, opts, prov);
  WeightCharacter wc;
  wc.n = n;
  wc.r = r;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    size_t total = 0;
    for (const auto& [mu, v] : res.comp_dims[ci]) total += v;
    wc.add(comps[ci], Int(static_cast<unsigned long>(total)));
  }
  return wc;
}

}  // namespace weyl::coinvariants
