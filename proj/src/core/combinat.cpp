#include "combinat.hpp"

#include <algorithm>

namespace weyl::combinat {

Int factorial(int n) {
  if (n < 0) throw UsageError("factorial of negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

std::vector<ParkingFunction> enumerate_parking_functions(int n) {
  if (n < 1) throw UsageError("parking functions need n >= 1");
  std::vector<ParkingFunction> out;
  std::vector<int> f(n, 1);
  std::vector<int> count(n + 1);
  while (true) {
    std::fill(count.begin(), count.end(), 0);
    for (int v : f) count[v]++;
    bool ok = true;
    int seen = 0;
    for (int k = 1; k <= n && ok; ++k) {
      seen += count[k];
      ok = seen >= k;
    }
    if (ok) out.push_back(f);
    // next candidate in lexicographic order
    int pos = n - 1;
    while (pos >= 0 && f[pos] == n) f[pos--] = 1;
    if (pos < 0) break;
    f[pos]++;
  }
  return out;
}

std::vector<ASequence> enumerate_A(int n) {
  if (n < 1) throw UsageError("A-sequences need n >= 1");
  std::vector<ASequence> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int pos, int sum) -> void {
    if (pos == n) {
      if (sum == n) out.push_back(a);
      return;
    }
    // prefix condition: sum after this position must reach pos+1
    for (int v = std::max(0, pos + 1 - sum); v <= n - sum; ++v) {
      a[pos] = v;
      self(self, pos + 1, sum + v);
    }
    a[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<RaneySet> enumerate_raney(int n, int s) {
  if (n < 1 || s < 2) throw UsageError("Raney enumeration needs n >= 1, s >= 2");
  std::vector<RaneySet> out;
  std::vector<int> h(n);
  auto rec = [&](auto&& self, int j, int from) -> void {
    if (j == n) {
      out.push_back({h, n, s});
      return;
    }
    // the (j+1)-th smallest element may be at most s*j + 1
    for (int v = from; v <= std::min(s * j + 1, s * n - (n - 1 - j)); ++v) {
      h[j] = v;
      self(self, j + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

WeightCharacter raney_weight_census(int n, int r) {
  if (n < 0 || r < 1) throw UsageError("census needs n >= 0, r >= 1");
  WeightCharacter wc;
  wc.n = n;
  wc.r = r;
  for (const auto& rs : enumerate_raney(n + 1, r + 1)) {
    std::vector<int> comp(r + 1, 0);
    for (int v : rs.h) {
      int residue = v % (r + 1);
      for (int j = 1; j <= r; ++j)
        if (residue == (j + 1) % (r + 1)) comp[j]++;
    }
    int placed = 0;
    for (int j = 1; j <= r; ++j) placed += comp[j];
    comp[0] = n - placed;
    wc.add(comp, 1);
  }
  return wc;
}

namespace {

Int exact_int(const Rat& v) {
  if (v.get_den() != 1) throw std::logic_error("closed form did not evaluate to an integer");
  return v.get_num();
}

}  // namespace

Int catalan(int n) {
  if (n < 0) throw UsageError("catalan: n >= 0");
  return exact_int(Rat(factorial(2 * n + 2)) / Rat(factorial(n + 1) * factorial(n + 2)));
}

Int narayana(int n, int i) {
  if (i < 0 || i > n) throw UsageError("narayana: 0 <= i <= n");
  return exact_int(Rat(factorial(n + 1) * factorial(n)) /
                   Rat(factorial(n - i + 1) * factorial(n - i) * factorial(i + 1) * factorial(i)));
}

Int higher_catalan(int n, int r) {
  if (n < 0 || r < 1) throw UsageError("higher_catalan: n >= 0, r >= 1");
  return exact_int(Rat(factorial((r + 1) * (n + 1))) /
                   Rat(factorial(n + 1) * factorial(r * (n + 1) + 1)));
}

Int hoggatt_conjecture_dim(int n, int i, int d) {
  if (i < 0 || i > n) throw UsageError("hoggatt: 0 <= i <= n");
  if (d < 1) throw UsageError("hoggatt: d >= 1");
  if (i == 0 || i == n) return 1;
  Rat v = 1;
  for (int j = 1; j <= i; ++j) v *= Rat(factorial(d + n - j)) / Rat(factorial(n - j));
  for (int k = 2; k <= i - 1; ++k) v *= Rat(factorial(k));
  for (int k = d; k <= d + i - 1; ++k) v /= Rat(factorial(k));
  return exact_int(v);
}

}  // namespace weyl::combinat
