#ifndef CLOPEN_GF_POLY_HPP
#define CLOPEN_GF_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "clopen/arith.hpp"
#include "clopen/error.hpp"

/// Univariate polynomials over the prime field GF(p).
///
/// A polynomial is its coefficient vector, lowest degree first, with no
/// trailing zeros; the zero polynomial is the empty vector. Every function
/// takes the characteristic explicitly and expects reduced coefficients.
namespace clopen::gfp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_zero(const Poly& a) { return a.empty(); }

inline Poly constant(u64 c, u64 p) {
  Poly a{c % p};
  trim(a);
  return a;
}

inline Poly monomial(std::size_t k, u64 c = 1) {
  Poly a(k + 1, 0);
  a[k] = c;
  return a;
}

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  trim(out);
  return out;
}

inline Poly neg(const Poly& a, u64 p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (p - a[i]) % p;
  return out;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) { return add(a, neg(b, p), p); }

inline Poly scale(const Poly& a, u64 c, u64 p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::mul_mod(a[i], c, p);
  trim(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + arith::mul_mod(a[i], b[j], p)) % p;
  trim(out);
  return out;
}

/// Quotient and remainder; `b` nonzero.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) fail(ErrorKind::precondition, "polynomial division by zero");
  Poly r = a;
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const u64 inv = arith::inverse_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = arith::mul_mod(r[k + b.size() - 1], inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[k + j] = (r[k + j] + p - arith::mul_mod(c, b[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline Poly mod(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

inline Poly make_monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, arith::inverse_mod(a.back(), p), p);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

/// (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
    t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
  }
  if (r0.empty()) return {r0, s0, t0};
  const u64 inv = arith::inverse_mod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline Poly inverse_mod(const Poly& a, const Poly& m, u64 p) {
  auto [g, s, t] = ext_gcd(a, m, p);
  if (g != Poly{1}) fail(ErrorKind::precondition, "polynomial is not invertible modulo f");
  return mod(s, m, p);
}

inline Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = arith::mul_mod(a[i], i % p, p);
  trim(out);
  return out;
}

inline Poly pow_mod(Poly base, u64 exp, const Poly& m, u64 p) {
  Poly result = mod({1}, m, p);
  base = mod(base, m, p);
  while (exp) {
    if (exp & 1U) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    exp >>= 1U;
  }
  return result;
}

inline bool divides(const Poly& d, const Poly& a, u64 p) { return mod(a, d, p).empty(); }

inline std::string format(const Poly& a, const std::string& var = "x") {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    const u64 c = a[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

/// Canonical order on monic factors: by degree, then coefficients.
inline bool factor_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct Factor {
  Poly poly;  // monic irreducible
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

namespace detail {

/// g with g(x)^p = a(x); requires a' = 0.
inline Poly pth_root(const Poly& a, u64 p) {
  Poly out;
  for (std::size_t i = 0; i < a.size(); i += p) out.push_back(a[i]);
  trim(out);
  return out;
}

/// Squarefree parts with multiplicities (Yun's algorithm, adapted to
/// characteristic p).
inline std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f, u64 p) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly c = gcd(f, derivative(f, p), p);
  Poly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z = divmod(w, y, p).first;
    if (degree(z) > 0) out.emplace_back(make_monic(z, p), i);
    ++i;
    w = y;
    c = divmod(c, y, p).first;
  }
  if (degree(c) > 0) {
    for (auto& [g, m] : squarefree(pth_root(c, p), p)) out.emplace_back(g, m * static_cast<unsigned>(p));
  }
  return out;
}

/// Products of the irreducible factors of each degree of a squarefree f.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = monomial(1);
  Poly h = mod(x, f, p);
  for (unsigned d = 1; 2 * static_cast<int>(d) <= degree(f); ++d) {
    h = pow_mod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(make_monic(f, p), static_cast<unsigned>(degree(f)));
  return out;
}

/// Splits f, a product of distinct irreducibles of degree d (Cantor-Zassenhaus).
inline void equal_degree(const Poly& f, unsigned d, u64 p, std::mt19937_64& rng,
                         std::vector<Poly>& out) {
  if (degree(f) == static_cast<int>(d)) {
    out.push_back(make_monic(f, p));
    return;
  }
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (degree(a) < 1) continue;
    Poly h;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) splits in characteristic 2.
      Poly t = a;
      h = a;
      for (unsigned i = 1; i < d; ++i) {
        t = mod(mul(t, t, p), f, p);
        h = add(h, t, p);
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      Poly t = a;
      Poly acc = mod(a, f, p);
      for (unsigned i = 1; i < d; ++i) {
        t = pow_mod(t, p, f, p);
        acc = mod(mul(acc, t, p), f, p);
      }
      h = sub(pow_mod(acc, (p - 1) / 2, f, p), {1}, p);
    }
    Poly g = gcd(f, h, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by `factor_less`. The leading constant is dropped.
inline std::vector<Factor> factor(const Poly& f, u64 p) {
  if (f.empty()) fail(ErrorKind::precondition, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  std::mt19937_64 rng(0x5eedULL ^ (p * 1315423911ULL) ^ f.size());
  for (auto& [part, mult] : detail::squarefree(make_monic(f, p), p))
    for (auto& [bucket, d] : detail::distinct_degree(part, p)) {
      std::vector<Poly> irreducibles;
      detail::equal_degree(bucket, d, p, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  // Squarefree parts are coprime, so each irreducible shows up once.
  return out;
}

}  // namespace clopen::gfp

#endif  // CLOPEN_GF_POLY_HPP
