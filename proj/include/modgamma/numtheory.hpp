/* Copyright 2026 The modgamma Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MODGAMMA_NUMTHEORY_HPP
#define MODGAMMA_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modgamma {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Non-negative residue of a modulo m (m > 0).
constexpr i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

constexpr u64 pow_mod(u64 base, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

/// Trial division; every modulus in this library is far below 2^32.
constexpr bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors in ascending order.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 r : prime_factors(n)) result = result / r * (r - 1);
  return result;
}

inline int mobius(u64 n) {
  int sign = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Least k >= 1 with a^k = 1 mod m. Requires gcd(a, m) = 1; returns 1 for m = 1.
inline u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: modulus 0");
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1)
    throw std::invalid_argument("multiplicative_order: base not coprime to modulus");
  u64 order = euler_phi(m);
  for (u64 r : prime_factors(order))
    while (order % r == 0 && pow_mod(a, order / r, m) == 1) order /= r;
  return order;
}

/// Exact integer power; throws if the result would exceed `limit`.
inline u64 checked_pow(u64 base, u64 e, u64 limit) {
  u64 result = 1;
  for (u64 i = 0; i < e; ++i) {
    if (base != 0 && result > limit / base)
      throw std::overflow_error("checked_pow: result exceeds limit");
    result *= base;
  }
  if (result > limit) throw std::overflow_error("checked_pow: result exceeds limit");
  return result;
}

/// Splits n = ell^a * rest with gcd(ell, rest) = 1. Returns {ell^a, rest, a}.
struct prime_part {
  u64 power;
  u64 rest;
  unsigned exponent;
};

inline prime_part split_prime_part(u64 n, u64 ell) {
  if (ell < 2 || n == 0) throw std::invalid_argument("split_prime_part: need ell >= 2 and n >= 1");
  prime_part out{1, n, 0};
  while (out.rest % ell == 0) {
    out.rest /= ell;
    out.power *= ell;
    ++out.exponent;
  }
  return out;
}

/// If q = p^f for a prime p and f >= 1, returns {p, f}.
inline std::optional<std::pair<u64, unsigned>> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  return std::pair<u64, unsigned>{factors.front(), split_prime_part(q, factors.front()).exponent};
}

/// Smallest c >= 0 with ell^c >= n (n >= 1).
inline unsigned ceil_log(u64 ell, u64 n) {
  unsigned c = 0;
  u64 power = 1;
  while (power < n) {
    power *= ell;
    ++c;
  }
  return c;
}

/// Chinese remainder for coprime moduli: x = a mod m, x = b mod n, 0 <= x < mn.
inline u64 crt_pair(u64 a, u64 m, u64 b, u64 n) {
  // Brute walk over the smaller progression; the moduli here are tiny.
  for (u64 x = a % m; x < m * n; x += m)
    if (x % n == b % n) return x;
  throw std::invalid_argument("crt_pair: moduli not coprime");
}

}  // namespace modgamma

#endif  // MODGAMMA_NUMTHEORY_HPP
