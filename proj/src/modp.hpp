#pragma once

// Arithmetic in F_p for word-sized primes.

#include <cstdint>
#include <vector>

#include "gspec/exactalg.hpp"

namespace gspec::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 reduce(const Integer& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) + b) % p); }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + p - b); }

// a != 0 mod p.
inline u64 inverse(u64 a, u64 p) {
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

// Ascending coefficients, trailing zeros removed; empty is the zero polynomial.
using Poly = std::vector<u64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly reduce(const IntPoly& f, u64 p) {
  Poly r(f.coefficients().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = reduce(f.coefficients()[i], p);
  trim(r);
  return r;
}

// a <- a mod b, b nonzero.
inline void poly_rem(Poly& a, const Poly& b, u64 p) {
  const u64 inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = mul(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(q, b[i], p), p);
    trim(a);
  }
}

inline void make_monic(Poly& f, u64 p) {
  if (f.empty()) return;
  const u64 inv = inverse(f.back(), p);
  for (auto& c : f) c = mul(c, inv, p);
}

}  // namespace gspec::modp
