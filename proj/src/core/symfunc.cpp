#include "symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "combinat.hpp"

namespace weyl::symfunc {

Partition conjugate(const Partition& p) {
  Partition c;
  for (int col = 1; !p.empty() && col <= p[0]; ++col) {
    int h = 0;
    for (int part : p)
      if (part >= col) ++h;
    c.push_back(h);
  }
  return c;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = std::accumulate(a.begin(), a.end(), 0);
  int sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) return false;
  int pa = 0, pb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa < pb) return false;
  }
  return true;
}

namespace {

std::map<std::pair<Partition, std::vector<int>>, long>& kostka_cache() {
  static std::map<std::pair<Partition, std::vector<int>>, long> cache;
  return cache;
}
std::mutex kostka_mutex;

long kostka_rec(const Partition& shape, std::vector<int>& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_cache().find({shape, content});
    if (it != kostka_cache().end()) return it->second;
  }
  int strip = content.back();
  content.pop_back();

  // remove a horizontal strip of the given size: nu interlaces shape
  long total = 0;
  size_t rows = shape.size();
  Partition nu(rows);
  auto rec = [&](auto&& self, size_t row, int left) -> void {
    if (row == rows) {
      if (left == 0) {
        Partition trimmed = nu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += kostka_rec(trimmed, content);
      }
      return;
    }
    int lo = row + 1 < rows ? shape[row + 1] : 0;
    for (int v = shape[row]; v >= lo; --v) {
      if (shape[row] - v > left) break;
      nu[row] = v;
      self(self, row + 1, left - (shape[row] - v));
    }
  };
  rec(rec, 0, strip);

  content.push_back(strip);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_cache()[{shape, content}] = total;
  return total;
}

}  // namespace

long kostka(const Partition& shape, const std::vector<int>& content) {
  int ssum = std::accumulate(shape.begin(), shape.end(), 0);
  int csum = std::accumulate(content.begin(), content.end(), 0);
  if (ssum != csum) throw UsageError("kostka: size mismatch");
  std::vector<int> c;
  for (int v : content) {
    if (v < 0) throw UsageError("kostka: negative content entry");
    if (v > 0) c.push_back(v);  // zero parts contribute empty strips
  }
  return kostka_rec(shape, c);
}

void SymFuncExpr::add(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

SymFuncExpr h_to_schur(const SymFuncExpr& x) {
  if (x.basis != Basis::h) throw UsageError("h_to_schur: expression not in h basis");
  SymFuncExpr out;
  out.basis = Basis::s;
  out.degree = x.degree;
  auto shapes = partitions_of(x.degree);
  for (const auto& [mu, c] : x.coeffs)
    for (const auto& lam : shapes) {
      long k = kostka(lam, mu);
      if (k != 0) out.add(lam, c * Rat(k));
    }
  return out;
}

SymFuncExpr e_to_schur(const SymFuncExpr& x) {
  if (x.basis != Basis::e) throw UsageError("e_to_schur: expression not in e basis");
  SymFuncExpr out;
  out.basis = Basis::s;
  out.degree = x.degree;
  auto shapes = partitions_of(x.degree);
  for (const auto& [mu, c] : x.coeffs)
    for (const auto& nu : shapes) {
      long k = kostka(nu, mu);
      if (k != 0) out.add(conjugate(nu), c * Rat(k));
    }
  return out;
}

namespace {

// m_lambda as a Schur expansion, from the unitriangular system
// s_lambda = m_lambda + sum_{mu < lambda} K_{lambda mu} m_mu.
std::map<Partition, Rat> monomial_in_schur(const Partition& lam) {
  static std::map<Partition, std::map<Partition, Rat>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, Rat> result;
  result[lam] = 1;
  int n = std::accumulate(lam.begin(), lam.end(), 0);
  for (const auto& mu : partitions_of(n)) {
    if (mu == lam) continue;
    long k = kostka(lam, mu);
    if (k == 0) continue;
    for (const auto& [nu, c] : monomial_in_schur(mu)) {
      auto [it, fresh] = result.emplace(nu, -Rat(k) * c);
      if (!fresh) {
        it->second -= Rat(k) * c;
        if (it->second == 0) result.erase(it);
      }
    }
  }
  std::lock_guard<std::mutex> lock(mtx);
  cache[lam] = result;
  return result;
}

}  // namespace

SymFuncExpr to_schur(const SymFuncExpr& x) {
  switch (x.basis) {
    case Basis::h:
      return h_to_schur(x);
    case Basis::e:
      return e_to_schur(x);
    case Basis::s:
      return x;
    case Basis::m: {
      SymFuncExpr out;
      out.basis = Basis::s;
      out.degree = x.degree;
      for (const auto& [mu, c] : x.coeffs)
        for (const auto& [lam, k] : monomial_in_schur(mu)) out.add(lam, c * k);
      return out;
    }
  }
  throw std::logic_error("unknown basis");
}

SymFuncExpr tensor_sign(const SymFuncExpr& x) {
  SymFuncExpr out;
  out.degree = x.degree;
  switch (x.basis) {
    case Basis::h:
      out.basis = Basis::e;
      out.coeffs = x.coeffs;
      return out;
    case Basis::e:
      out.basis = Basis::h;
      out.coeffs = x.coeffs;
      return out;
    case Basis::s:
      out.basis = Basis::s;
      for (const auto& [lam, c] : x.coeffs) out.add(conjugate(lam), c);
      return out;
    case Basis::m:
      return tensor_sign(to_schur(x));
  }
  throw std::logic_error("unknown basis");
}

SymFuncExpr parking_frobenius(int n) {
  if (n < 1) throw UsageError("parking_frobenius: n >= 1");
  SymFuncExpr out;
  out.basis = Basis::h;
  out.degree = n;
  for (const auto& a : combinat::enumerate_A(n)) {
    Partition p;
    for (int v : a)
      if (v > 0) p.push_back(v);
    std::sort(p.rbegin(), p.rend());
    out.add(p, 1);
  }
  return out;
}

Int dimension(const SymFuncExpr& x) {
  Rat total = 0;
  switch (x.basis) {
    case Basis::h:
    case Basis::e: {
      // dim of an induced module from a Young subgroup is a multinomial
      for (const auto& [mu, c] : x.coeffs) {
        Rat dim(combinat::factorial(x.degree));
        for (int part : mu) dim /= Rat(combinat::factorial(part));
        total += c * dim;
      }
      break;
    }
    case Basis::s: {
      std::vector<int> ones(x.degree, 1);
      for (const auto& [lam, c] : x.coeffs) total += c * Rat(kostka(lam, ones));
      break;
    }
    case Basis::m:
      return dimension(to_schur(x));
  }
  if (total.get_den() != 1) throw std::logic_error("non-integral module dimension");
  return total.get_num();
}

namespace {

// shape with xi_i = hw_i + ... + hw_r and xi_{r+1} = 0
Partition shape_from_hw(int r, const std::vector<int>& hw) {
  if (static_cast<int>(hw.size()) != r) throw UsageError("highest weight must have r entries");
  Partition xi(r + 1, 0);
  for (int i = r - 1; i >= 0; --i) {
    if (hw[i] < 0) throw UsageError("highest weight entries must be nonnegative");
    xi[i] = xi[i + 1] + hw[i];
  }
  return xi;
}

}  // namespace

IrrepList frobenius_transform(const SymFuncExpr& x, int r) {
  if (x.basis != Basis::s) throw UsageError("frobenius_transform: expression must be in s basis");
  IrrepList out;
  out.r = r;
  for (const auto& [lam, c] : x.coeffs) {
    if (c.get_den() != 1 || c < 0)
      throw UsageError("frobenius_transform: coefficients must be nonnegative integers");
    if (static_cast<int>(lam.size()) > r + 1) continue;  // killed
    std::vector<int> hw(r, 0);
    for (int i = 0; i < r; ++i) {
      int a = i < static_cast<int>(lam.size()) ? lam[i] : 0;
      int b = i + 1 < static_cast<int>(lam.size()) ? lam[i + 1] : 0;
      hw[i] = a - b;
    }
    auto [it, fresh] = out.entries.emplace(hw, c.get_num());
    if (!fresh) it->second += c.get_num();
  }
  return out;
}

WeightCharacter irrep_weight_character(int r, const std::vector<int>& hw, int level) {
  Partition xi = shape_from_hw(r, hw);
  int size = std::accumulate(xi.begin(), xi.end(), 0);
  if (level < 0) level = size;
  if (level < size || (level - size) % (r + 1) != 0)
    throw UsageError("irrep_weight_character: level incompatible with highest weight");
  int pad = (level - size) / (r + 1);
  for (auto& part : xi) part += pad;
  while (!xi.empty() && xi.back() == 0) xi.pop_back();

  WeightCharacter wc;
  wc.n = level;
  wc.r = r;
  for (const auto& comp : compositions(level, r + 1)) {
    long k = kostka(xi, comp);
    if (k != 0) wc.add(comp, Int(k));
  }
  return wc;
}

Int irrep_dim(int r, const std::vector<int>& hw) {
  Partition xi = shape_from_hw(r, hw);
  Rat dim = 1;
  for (int i = 0; i < r + 1; ++i)
    for (int j = i + 1; j < r + 1; ++j)
      dim *= make_rat(xi[i] - xi[j] + j - i, j - i);
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension formula not integral");
  return dim.get_num();
}

WeightCharacter frobenius_weight_character(const SymFuncExpr& x, int r) {
  IrrepList irreps = frobenius_transform(x, r);
  WeightCharacter wc;
  wc.n = x.degree;
  wc.r = r;
  for (const auto& [hw, mult] : irreps.entries) {
    WeightCharacter part = irrep_weight_character(r, hw, x.degree);
    for (const auto& [comp, k] : part.entries) wc.add(comp, mult * k);
  }
  return wc;
}

}  // namespace weyl::symfunc
