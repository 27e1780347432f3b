#pragma once

/**
 * @file modular.hpp
 * @brief Exact 64-bit modular arithmetic: primality, powers, inverses,
 *        primitive roots, Euler phi, unit groups.
 *
 * Everything is exact integer arithmetic; no floating point. The primality
 * test is deterministic Miller-Rabin over a witness set proven sufficient
 * for all 64-bit inputs, so there are no probabilistic failure modes.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cycloseq/errors.hpp"

namespace cycloseq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// a*b mod m without overflow.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp mod m by square-and-multiply; m >= 1.
inline u64 mod_pow(u64 base, u64 exp, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_pow: zero modulus");
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace detail {

inline constexpr u64 kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline bool strong_probable_prime(u64 n, u64 a, u64 d, int r) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

/// Deterministic primality test, exact for all 64-bit n.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : detail::kMillerRabinBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : detail::kMillerRabinBases)
    if (!detail::strong_probable_prime(n, a, d, r)) return false;
  return true;
}

/// Distinct prime factors of n, ascending.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> factors;
  for (u64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

/// Inverse of a modulo m (m >= 2, m < 2^63), via the extended Euclidean
/// algorithm. Throws NotInvertibleError unless gcd(a, m) = 1.
inline u64 mod_inverse(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  a %= m;
  i64 old_r = static_cast<i64>(m), r = static_cast<i64>(a);
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r != 1)
    throw NotInvertibleError("mod_inverse: " + std::to_string(a) +
                             " is not invertible mod " + std::to_string(m));
  return static_cast<u64>(old_t < 0 ? old_t + static_cast<i64>(m) : old_t);
}

/// Euler's totient.
inline u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  u64 phi = n, m = n;
  for (u64 p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
    if (m % p == 0) {
      phi -= phi / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

/// All residues in [1, n) coprime to n, ascending; n >= 2.
inline std::vector<u64> units(u64 n) {
  if (n < 2) throw std::invalid_argument("units: modulus must be >= 2");
  std::vector<u64> out;
  for (u64 r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) out.push_back(r);
  return out;
}

/// True when g generates the full multiplicative group mod the prime q.
inline bool is_primitive_root(u64 g, u64 q) {
  g %= q;
  if (g == 0) return false;
  if (q == 2) return g == 1;
  for (u64 p : prime_factors(q - 1))
    if (mod_pow(g, (q - 1) / p, q) == 1) return false;
  return true;
}

/// Smallest positive primitive root of the prime q (canonical choice).
inline u64 primitive_root(u64 q) {
  if (!is_prime(q)) throw NotPrimeError("primitive_root: " + std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  const auto factors = prime_factors(q - 1);
  for (u64 g = 2; g < q; ++g) {
    bool generates = true;
    for (u64 p : factors) {
      if (mod_pow(g, (q - 1) / p, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw NotPrimeError("primitive_root: no generator found");  // unreachable for prime q
}

}  // namespace cycloseq
