#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weyl {

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals (kept in lowest terms with positive denominator by GMP).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// Thrown when an input combination violates an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation hits a configured resource ceiling.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for configurations the engine deliberately does not cover.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exactla {

// A prime divides the denominator of an entry being reduced; the caller
// retries with a different prime or escalates to rational arithmetic.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic in F_p for p < 2^32, so products fit in uint64_t. Products
// are reduced by Barrett's method (one 128-bit multiply instead of a
// hardware division).
struct PrimeField {
  uint64_t p;
  uint64_t magic;  // floor(2^64 / p); exact since p is odd

  explicit PrimeField(uint64_t prime) : p(prime) {
    if (p < 3 || p >= (uint64_t{1} << 32)) throw UsageError("prime out of range");
    magic = ~uint64_t{0} / p;
  }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    uint64_t x = a * b;
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }

  uint64_t inv(uint64_t a) const {
    // extended Euclid; a must be nonzero mod p
    if (a == 0) throw std::logic_error("inverse of zero");
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
  }

  uint64_t reduce_int(const Int& z) const {
    Int m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
  }

  uint64_t reduce(const Rat& q) const {
    uint64_t den = reduce_int(q.get_den());
    if (den == 0) throw ReductionError("prime divides a denominator");
    uint64_t num = reduce_int(q.get_num());
    return mul(num, inv(den));
  }
};

bool is_prime(uint64_t n);

}  // namespace exactla
}  // namespace weyl
