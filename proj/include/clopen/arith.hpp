#ifndef CLOPEN_ARITH_HPP
#define CLOPEN_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "clopen/error.hpp"

namespace clopen::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Deterministic for every 64-bit input.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

/// A nontrivial factor of an odd composite n (Brent's variant).
inline u64 pollard_rho(u64 n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n, g = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    for (u64 r = 1; g == 1; r <<= 1U) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += 128) {
        ys = y;
        for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(u64 n, std::vector<u64>& primes, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n, rng);
  split(d, primes, rng);
  split(n / d, primes, rng);
}

}  // namespace detail

struct PrimePower {
  u64 prime;
  unsigned exponent;
  u64 value;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline constexpr u64 trial_division_bound = 1'000'000;

/// Prime factorization sorted by prime: trial division up to 10^6, then
/// Pollard rho on the cofactor.
inline std::vector<PrimePower> factor(u64 n) {
  if (n == 0) fail(ErrorKind::precondition, "cannot factor 0");
  std::vector<u64> primes;
  for (u64 p = 2; p <= trial_division_bound && p * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  if (n > 1) {
    std::mt19937_64 rng(n);
    detail::split(n, primes, rng);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (auto p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
      out.back().value *= p;
    } else {
      out.push_back({p, 1, p});
    }
  }
  return out;
}

/// Number of distinct prime divisors.
inline std::size_t omega(u64 n) { return factor(n).size(); }

/// Product of the distinct primes dividing n.
inline u64 radical(u64 n) {
  u64 r = 1;
  for (const auto& pp : factor(n)) r *= pp.prime;
  return r;
}

inline bool is_prime_power(u64 n) { return n > 1 && factor(n).size() == 1; }

/// Sorted positive divisors.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& pp : factor(n)) {
    const std::size_t existing = out.size();
    u64 mult = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      mult *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * mult);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline u64 inverse_mod(u64 a, u64 m) {
  using i128 = __int128;
  i128 old_r = static_cast<i128>(a % m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::tie(old_r, r) = std::pair<i128, i128>{r, old_r - q * r};
    std::tie(old_s, s) = std::pair<i128, i128>{s, old_s - q * s};
  }
  if (old_r != 1) fail(ErrorKind::precondition, "element is not invertible");
  const i128 mm = m;
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

/// x with x = residues[i] mod moduli[i]; moduli pairwise coprime.
inline u64 crt(const std::vector<u64>& residues, const std::vector<u64>& moduli) {
  u64 modulus = 1, x = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const u64 m = moduli[i];
    // x' = x + modulus * t with t = (r - x) / modulus mod m.
    const u64 diff = (residues[i] % m + m - x % m) % m;
    const u64 t = mul_mod(diff, inverse_mod(modulus % m, m), m);
    x += static_cast<u64>(static_cast<u128>(modulus) * t);
    modulus *= m;
    x %= modulus;
  }
  return x;
}

}  // namespace clopen::arith

#endif  // CLOPEN_ARITH_HPP
