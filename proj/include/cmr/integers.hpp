#pragma once

// Arbitrary-precision integer helpers shared across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmr {

using Int = boost::multiprecision::cpp_int;

// Remainder in [0, m). cpp_int's % follows the dividend sign.
inline Int mod_pos(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int ipow(long base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Int ipow(const Int& base, unsigned long exp) {
  Int r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline Int powmod(const Int& base, const Int& exp, const Int& m) {
  Int r = 1, b = mod_pos(base, m), e = exp;
  while (e > 0) {
    if ((e & 1) != 0) r = mod_pos(r * b, m);
    b = mod_pos(b * b, m);
    e >>= 1;
  }
  return r;
}

// p-adic valuation of x != 0; returns cap if v >= cap.
inline int val_p(const Int& x, long p, int cap) {
  Int y = x;
  int v = 0;
  while (v < cap && y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Inverse of x mod p^n; x must be a unit (not divisible by p).
inline Int inv_mod_pow(const Int& x, long p, int n) {
  Int m = ipow(p, n);
  Int a = mod_pos(x, m);
  if (a % p == 0) throw std::domain_error("inv_mod_pow: not a unit mod p^n");
  // Euler: unit group order is p^(n-1)(p-1).
  Int order = ipow(p, n - 1) * (p - 1);
  return powmod(a, order - 1, m);
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_dec(const Int& x) { return x.str(); }

}  // namespace cmr
