#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "gsp4/bigint.hpp"

namespace gsp4::detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}
inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return mod_floor(a * b, m); }

inline std::int64_t submod(std::int64_t a, std::int64_t b, std::int64_t m) {
  std::int64_t r = (a - b) % m;
  return r < 0 ? r + m : r;
}
inline BigInt submod(const BigInt& a, const BigInt& b, const BigInt& m) { return mod_floor(a - b, m); }

template <class T>
T inverse_mod(T a, const T& m) {
  T g = m, x = 0, x1 = 1;
  a %= m;
  if (a < 0) a += m;
  T r = a;
  while (r != 0) {
    T q = g / r;
    T t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("not a unit modulo p^E");
  x %= m;
  if (x < 0) x += m;
  return x;
}

/// p-adic valuation of a residue modulo p^cap; zero counts as cap.
template <class T>
int valuation_capped(T a, std::int64_t p, int cap) {
  if (a == 0) return cap;
  int v = 0;
  while (v < cap && a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

/// True when p^e fits comfortably in a signed 64-bit integer.
inline bool fits_int64(std::int64_t p, int e) {
  __int128 acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= p;
    if (acc > (static_cast<__int128>(1) << 62)) return false;
  }
  return true;
}

/// Elementary divisor valuations of a 4x4 matrix over Z/p^E, assuming all of
/// them are below E. Destroys a.
template <class T>
std::array<int, 4> smith_valuations(std::array<std::array<T, 4>, 4>& a, std::int64_t p, int e, const T& modulus) {
  std::array<bool, 4> row_used{}, col_used{};
  std::array<int, 4> out{};
  for (int step = 0; step < 4; ++step) {
    int best = e + 1, br = -1, bc = -1;
    for (int r = 0; r < 4; ++r) {
      if (row_used[r]) continue;
      for (int c = 0; c < 4; ++c) {
        if (col_used[c]) continue;
        int v = valuation_capped(a[r][c], p, e);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (best >= e) throw std::logic_error("modulus too small for elementary divisors");
    T pk = 1;
    for (int i = 0; i < best; ++i) pk *= p;
    T uinv = inverse_mod<T>(a[br][bc] / pk, modulus);
    for (int r = 0; r < 4; ++r) {
      if (row_used[r] || r == br || a[r][bc] == 0) continue;
      T f = mulmod(static_cast<T>(a[r][bc] / pk), uinv, modulus);
      for (int c = 0; c < 4; ++c)
        if (!col_used[c]) a[r][c] = submod(a[r][c], mulmod(f, a[br][c], modulus), modulus);
    }
    row_used[br] = col_used[bc] = true;
    out[step] = best;
  }
  return out;
}

}  // namespace gsp4::detail
