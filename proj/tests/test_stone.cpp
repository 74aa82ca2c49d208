#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "clopen/stone.hpp"
#include "oracles.hpp"

using namespace clopen;

namespace {

FiniteSpace sierpinski() { return from_subbasis(2, {0b10}); }
FiniteSpace pseudocircle() { return from_subbasis(4, {0b0001, 0b0010, 0b0111, 0b1011}); }
FiniteSpace sierpinski_plus_point() { return from_subbasis(3, {0b010, 0b011, 0b100}); }
// Pseudocircle on 0..3 plus isolated point 4.
FiniteSpace pseudocircle_plus_point() {
  return from_subbasis(5, {0b00001, 0b00010, 0b00111, 0b01011, 0b10000});
}

// Every prime ideal of a table Boolean ring, by enumerating all ideals
// reachable from {0} through "add one generator and close" steps.
std::set<std::vector<std::size_t>> primes_by_ideal_search(const BoolRing& b) {
  const std::size_t s = b.size();
  using Bits = std::vector<bool>;
  auto close = [&](Bits ideal, std::size_t g) {
    std::vector<std::size_t> mult;
    for (std::size_t r = 0; r < s; ++r) mult.push_back(b.mul(r, g));
    std::vector<std::size_t> cur;
    for (std::size_t i = 0; i < s; ++i)
      if (ideal[i]) cur.push_back(i);
    for (auto i : cur)
      for (auto m : mult) ideal[b.add(i, m)] = true;
    return ideal;
  };
  std::set<Bits> seen;
  std::vector<Bits> todo;
  Bits zero(s, false);
  zero[b.zero()] = true;
  seen.insert(zero);
  todo.push_back(zero);
  while (!todo.empty()) {
    Bits cur = todo.back();
    todo.pop_back();
    for (std::size_t g = 0; g < s; ++g) {
      if (cur[g]) continue;
      auto next = close(cur, g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  std::set<std::vector<std::size_t>> primes;
  for (const auto& bits : seen) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < s; ++i)
      if (bits[i]) m.push_back(i);
    if (is_prime_ideal(b, m)) primes.insert(m);
  }
  return primes;
}

}  // namespace

TEST(BoolRing, RejectsAxiomViolation) {
  // Z/3 is not Boolean.
  std::vector<std::uint16_t> add{0, 1, 2, 1, 2, 0, 2, 0, 1}, mul{0, 0, 0, 0, 1, 2, 0, 2, 1};
  EXPECT_THROW(BoolRing(3, add, mul, 0, 1), Error);
}

TEST(BoolRing, JsonRoundTrip) {
  const auto b = tabulate(PowerSetRing(2));
  EXPECT_EQ(bool_ring_from_json(to_json(b)), b);
}

TEST(Atoms, Examples) {
  EXPECT_EQ(atoms(PowerSetRing(1)), (std::vector<std::size_t>{1}));
  const auto c = clop_ring(FiniteSpace::discrete(3));
  std::vector<PointSet> sets;
  for (auto a : atoms(c)) sets.push_back(c.set(a));
  EXPECT_EQ(sets, (std::vector<PointSet>{0b001, 0b010, 0b100}));
  const auto d = clop_ring(sierpinski_plus_point());
  sets.clear();
  for (auto a : atoms(d)) sets.push_back(d.set(a));
  EXPECT_EQ(sets, (std::vector<PointSet>{0b011, 0b100}));
}

TEST(Atoms, PowerLawOrthogonalSumToOne) {
  for (std::size_t k = 0; k <= 8; ++k) {
    const PowerSetRing r(k);
    const auto at = atoms(r);
    EXPECT_EQ(r.size(), std::size_t{1} << at.size());
    std::size_t sum = r.zero();
    for (std::size_t i = 0; i < at.size(); ++i) {
      sum = r.add(sum, at[i]);
      for (std::size_t j = i + 1; j < at.size(); ++j) EXPECT_EQ(r.mul(at[i], at[j]), r.zero());
    }
    if (k > 0) {
      EXPECT_EQ(sum, r.one());
    }
  }
}

TEST(SpecBool, PointCounts) {
  EXPECT_EQ(spec_bool(PowerSetRing(1)).space.size(), 1U);
  EXPECT_EQ(spec_bool(PowerSetRing(2)).space.size(), 2U);
  EXPECT_EQ(spec_bool(PowerSetRing(3)).space.size(), 3U);
  EXPECT_EQ(spec_bool(PowerSetRing(0)).space.size(), 0U);
}

TEST(SpecBool, AgreesWithIdealSearchUpTo256) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto table = tabulate(PowerSetRing(k));
    const auto s = spec_bool(table);
    std::set<std::vector<std::size_t>> from_atoms(s.primes.begin(), s.primes.end());
    EXPECT_EQ(from_atoms, primes_by_ideal_search(table)) << "k=" << k;
    EXPECT_TRUE(s.space.is_discrete());
  }
}

TEST(SpecBool, AgreesWithSubsetScanOnSmallRings) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const PowerSetRing r(k);
    const auto ideals = oracle::ideals_by_subset_scan(
        r.size(), [&](auto a, auto b) { return r.add(a, b); },
        [&](auto a, auto b) { return r.mul(a, b); }, r.zero());
    std::set<std::vector<std::size_t>> primes;
    for (auto bits : ideals) {
      std::vector<std::size_t> m;
      for (std::size_t i = 0; i < r.size(); ++i)
        if ((bits >> i) & 1U) m.push_back(i);
      if (is_prime_ideal(r, m)) primes.insert(m);
    }
    const auto s = spec_bool(r);
    EXPECT_EQ(std::set<std::vector<std::size_t>>(s.primes.begin(), s.primes.end()), primes);
  }
}

TEST(StoneMap, Examples) {
  const auto d = stone_map(FiniteSpace::discrete(2));
  EXPECT_EQ(d.image.size(), 2U);
  EXPECT_NE(*d.image[0], *d.image[1]);

  const auto s = stone_map(sierpinski());
  ASSERT_EQ(s.image.size(), 1U);
  EXPECT_EQ(s.spectrum.primes[*s.image[0]], (std::vector<std::size_t>{s.clop.index_of(0)}));

  const auto p = stone_map(pseudocircle_plus_point());
  EXPECT_EQ(p.components.size(), 2U);
  EXPECT_TRUE(p.well_defined);
  EXPECT_NE(*p.image[0], *p.image[1]);
}

TEST(StoneHomeo, AllThreePointSpaces) {
  for (const auto& x : enumerate_topologies(3)) EXPECT_TRUE(stone_homeo_check(x).pass) << describe(x);
  EXPECT_TRUE(stone_homeo_check(FiniteSpace::discrete(1)).pass);
  EXPECT_TRUE(stone_homeo_check(FiniteSpace::indiscrete(4)).pass);
}

TEST(Selfdual, Examples) {
  EXPECT_TRUE(selfdual_check(FiniteSpace::discrete(3)));
  EXPECT_FALSE(selfdual_check(sierpinski()));
  EXPECT_FALSE(selfdual_check(FiniteSpace::indiscrete(2)));
}

TEST(Finiteness, Examples) {
  auto r = finiteness_suite(FiniteSpace::discrete(3));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(clop_ring(FiniteSpace::discrete(3)).size(), 8U);
  EXPECT_TRUE(finiteness_suite(pseudocircle()).pass);
  EXPECT_EQ(clop_ring(pseudocircle()).size(), 2U);
  for (const auto& x : enumerate_topologies(4)) EXPECT_TRUE(finiteness_suite(x).pass);
}

TEST(Report, JsonShape) {
  auto j = to_json(finiteness_suite(sierpinski(), "sierpinski"));
  EXPECT_EQ(j["check"], "finiteness");
  EXPECT_EQ(j["instance"], "sierpinski");
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["witness"].is_null());
}
