#include <gtest/gtest.h>

#include <random>

#include "clopen/arith.hpp"
#include "clopen/gf_poly.hpp"
#include "oracles.hpp"

using namespace clopen;

namespace {

// All monic polynomials of exact degree d over GF(p).
std::vector<gfp::Poly> monics(std::uint64_t p, std::size_t d) {
  std::vector<gfp::Poly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    gfp::Poly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= p) f[i] = c % p;
    out.push_back(f);
  }
  return out;
}

// Irreducibility by trial division with every monic of degree <= deg/2.
bool irreducible_by_trial(const gfp::Poly& f, std::uint64_t p) {
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d)
    for (const auto& g : monics(p, d))
      if (gfp::divides(g, f, p)) return false;
  return gfp::degree(f) >= 1;
}

// Rabin's irreducibility test.
bool irreducible_rabin(const gfp::Poly& f, std::uint64_t p) {
  const auto n = static_cast<std::size_t>(gfp::degree(f));
  const gfp::Poly x = gfp::monomial(1);
  auto frob = [&](std::size_t k) {
    gfp::Poly h = gfp::mod(x, f, p);
    for (std::size_t i = 0; i < k; ++i) h = gfp::pow_mod(h, p, f, p);
    return h;
  };
  if (gfp::mod(gfp::sub(frob(n), x, p), f, p) != gfp::Poly{}) return false;
  for (auto q : arith::factor(n))
    if (gfp::degree(gfp::gcd(f, gfp::sub(frob(n / q.prime), x, p), p)) > 0) return false;
  return true;
}

gfp::Poly expand(const std::vector<gfp::Factor>& fs, std::uint64_t p) {
  gfp::Poly out{1};
  for (const auto& f : fs)
    for (unsigned i = 0; i < f.multiplicity; ++i) out = gfp::mul(out, f.poly, p);
  return out;
}

}  // namespace

TEST(Arith, PrimalityAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n)
    EXPECT_EQ(arith::is_prime(n), n >= 2 && oracle::distinct_primes(n) == std::vector<std::uint64_t>{n}) << n;
  EXPECT_TRUE(arith::is_prime(1'000'000'007ULL));
  EXPECT_FALSE(arith::is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST(Arith, FactorSmall) {
  EXPECT_EQ(arith::factor(360),
            (std::vector<arith::PrimePower>{{2, 3, 8}, {3, 2, 9}, {5, 1, 5}}));
  EXPECT_EQ(arith::factor(1).size(), 0U);
  EXPECT_EQ(arith::omega(12), 2U);
  EXPECT_EQ(arith::radical(72), 6U);
  EXPECT_EQ(arith::divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(arith::factor(0), Error);
}

TEST(Arith, FactorMatchesTrialDivision) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = 2 + rng() % 1'000'000'000ULL;
    std::vector<std::uint64_t> primes;
    std::uint64_t prod = 1;
    for (const auto& pp : arith::factor(n)) {
      primes.push_back(pp.prime);
      prod *= pp.value;
      EXPECT_TRUE(arith::is_prime(pp.prime));
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(primes, oracle::distinct_primes(n)) << n;
  }
}

TEST(Arith, PollardRhoBeyondTrialBound) {
  const std::uint64_t p = 1'000'003, q = 1'000'033;
  EXPECT_EQ(arith::factor(p * q), (std::vector<arith::PrimePower>{{p, 1, p}, {q, 1, q}}));
  const std::uint64_t big = 4'294'967'291ULL;  // prime
  EXPECT_EQ(arith::factor(big * 3).size(), 2U);
}

TEST(Arith, Crt) {
  EXPECT_EQ(arith::crt({1, 0}, {4, 3}), 9U);
  EXPECT_EQ(arith::crt({0, 1}, {4, 3}), 4U);
  EXPECT_EQ(arith::crt({2, 3, 1}, {3, 5, 7}), 8U);
}

TEST(GfPoly, Arithmetic) {
  const std::uint64_t p = 3;
  const gfp::Poly a{1, 1}, b{2, 1};  // x+1, x+2
  EXPECT_EQ(gfp::mul(a, b, p), (gfp::Poly{2, 0, 1}));
  auto [q, r] = gfp::divmod({2, 0, 1}, a, p);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(gfp::gcd({2, 0, 1}, {1, 2, 1}, p), a);
  EXPECT_EQ(gfp::format({1, 0, 1, 1}), "x^3+x^2+1");
  EXPECT_EQ(gfp::format({0, 2}), "2x");
  EXPECT_EQ(gfp::inverse_mod({0, 1}, {1, 0, 1}, 2), (gfp::Poly{0, 1}));
}

TEST(GfPoly, FactorExamples) {
  // x^3 + x = x (x+1)^2 over GF(2).
  EXPECT_EQ(gfp::factor({0, 1, 0, 1}, 2),
            (std::vector<gfp::Factor>{{{0, 1}, 1}, {{1, 1}, 2}}));
  // x^4 + x^2 + 1 = (x^2+x+1)^2 over GF(2): derivative vanishes.
  EXPECT_EQ(gfp::factor({1, 0, 1, 0, 1}, 2), (std::vector<gfp::Factor>{{{1, 1, 1}, 2}}));
  // x^9 - x^3 = x^3 (x-1)^3 (x+1)^3 over GF(3).
  auto f = gfp::factor({0, 0, 0, 2, 0, 0, 0, 0, 0, 1}, 3);
  EXPECT_EQ(f.size(), 3U);
  for (const auto& fac : f) EXPECT_EQ(fac.multiplicity, 3U);
}

TEST(GfPoly, FactorAllSmallMonicsAgainstTrialDivision) {
  const std::pair<std::uint64_t, std::size_t> fields[] = {{2, 8}, {3, 5}, {5, 4}};
  for (auto [p, maxd] : fields)
    for (std::size_t d = 1; d <= maxd; ++d)
      for (const auto& f : monics(p, d)) {
        const auto fs = gfp::factor(f, p);
        EXPECT_EQ(expand(fs, p), f);
        for (const auto& fac : fs) EXPECT_TRUE(irreducible_by_trial(fac.poly, p));
        for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_NE(fs[i - 1].poly, fs[i].poly);
      }
}

TEST(GfPoly, FactorRandomDegreeTwelve) {
  std::mt19937_64 rng(5);
  const std::uint64_t primes[] = {2, 3, 7, 13, 31, 61, 89, 97};
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t p = primes[trial % 8];
    gfp::Poly f(13);
    for (auto& c : f) c = rng() % p;
    f[12] = 1;
    const auto fs = gfp::factor(f, p);
    EXPECT_EQ(expand(fs, p), f);
    for (const auto& fac : fs) EXPECT_TRUE(irreducible_rabin(fac.poly, p));
  }
}
