#include <gtest/gtest.h>

#include "clopen/primary_spec.hpp"
#include "oracles.hpp"

using namespace clopen;

namespace {

RingElem z(u64 v) { return {{v}}; }

std::vector<std::string> names(const Ring& r, const std::vector<PrimaryIdeal>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format(r, p));
  return out;
}

PointSet points_named(const Ring& r, const PrimarySpace& ps, std::vector<std::string> wanted) {
  PointSet out = 0;
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    if (std::find(wanted.begin(), wanted.end(), format(r, ps.points[i])) != wanted.end())
      out |= singleton(i);
  return out;
}

// Primary test for (d) in Z/n from the definition. Membership in (d) only
// depends on residues mod d, so a and b range over 0..d-1.
bool primary_by_definition(u64 d) {
  if (d == 1) return false;
  auto in_ideal = [&](u64 v) { return v % d == 0; };
  auto in_radical = [&](u64 a) {
    u64 pw = a % d;
    for (int k = 0; k < 64; ++k, pw = pw * a % d)
      if (in_ideal(pw)) return true;
    return false;
  };
  for (u64 a = 0; a < d; ++a) {
    if (in_radical(a)) continue;
    for (u64 b = 0; b < d; ++b)
      if (in_ideal(a * b) && !in_ideal(b)) return false;
  }
  return true;
}

TableRing table_of(u64 n) { return std::get<TableRing>(tabulate_ring(Ring(make_zmod(n)), "z" + std::to_string(n)).kind); }

}  // namespace

TEST(PrimaryIdeals, Examples) {
  Ring z4(make_zmod(4)), z12(make_zmod(12)), z5(make_zmod(5));
  EXPECT_EQ(names(z4, primary_ideals(z4)), (std::vector<std::string>{"(2)", "(0)"}));
  EXPECT_EQ(names(z12, primary_ideals(z12)), (std::vector<std::string>{"(2)", "(3)", "(4)"}));
  EXPECT_EQ(names(z5, primary_ideals(z5)), (std::vector<std::string>{"(0)"}));
  EXPECT_THROW(primary_ideals(Ring(make_poly_quot(2, {0, 1, 1}))), Error);
}

TEST(PrimaryIdeals, ZmodMatchesDefinition) {
  std::vector<u64> moduli;
  for (u64 n = 2; n <= 256; ++n) moduli.push_back(n);
  for (u64 n : {360, 1024, 2310, 3600, 4096}) moduli.push_back(n);
  for (u64 n : moduli) {
    Ring r(make_zmod(n));
    std::vector<u64> expected;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0 && primary_by_definition(d)) expected.push_back(d);
    std::vector<u64> got;
    for (const auto& p : primary_ideals(r)) got.push_back(p.divisor);
    ASSERT_EQ(got, expected) << n;
  }
}

TEST(PrimaryIdeals, TableRingsAgreeWithZmod) {
  for (u64 n : {4, 8, 9, 12, 16, 18, 27, 36, 60}) {
    Ring zr(make_zmod(n));
    Ring tr(make_table(table_of(n)));
    EXPECT_EQ(primary_ideals(tr).size(), primary_ideals(zr).size()) << n;
    EXPECT_TRUE(find_homeomorphism(primary_space(tr).space, primary_space(zr).space).has_value()) << n;
    EXPECT_EQ(sober_witness(tr).sober, sober_witness(zr).sober) << n;
  }
}

TEST(PrimarySpace, Examples) {
  Ring z4(make_zmod(4));
  const auto p4 = primary_space(z4);
  EXPECT_EQ(p4.space, FiniteSpace::indiscrete(2));
  EXPECT_EQ(u_set(p4.points, z(2)), 0U);
  EXPECT_EQ(u_set(p4.points, z(3)), p4.space.points());

  Ring z12(make_zmod(12));
  const auto p12 = primary_space(z12);
  EXPECT_EQ(u_set(p12.points, z(2)), points_named(z12, p12, {"(3)"}));
  EXPECT_EQ(u_set(p12.points, z(3)), points_named(z12, p12, {"(2)", "(4)"}));
  EXPECT_EQ(u_set(p12.points, z(6)), 0U);

  EXPECT_EQ(primary_space(Ring(make_zmod(5))).space.size(), 1U);
}

TEST(PrimarySpace, BasisIdentities) {
  for (u64 n = 2; n <= 200; ++n) {
    const auto rep = basis_identity_check(Ring(make_zmod(n)));
    ASSERT_TRUE(rep.pass) << to_json(rep).dump();
  }
  EXPECT_TRUE(basis_identity_check(Ring(make_zmod(1'000'000'000ULL))).pass);
  EXPECT_TRUE(basis_identity_check(Ring(make_table(table_of(24)))).pass);
}

TEST(PrimarySpace, SpecEmbeds) {
  for (u64 n = 2; n <= 200; ++n) {
    Ring r(make_zmod(n));
    const auto ps = primary_space(r);
    const auto sp = spec(r);
    PointSet primes = 0;
    for (const auto& p : sp.points)
      for (std::size_t i = 0; i < ps.points.size(); ++i)
        if (ps.points[i].divisor == p.prime) primes |= singleton(i);
    ASSERT_EQ(cardinality(primes), sp.points.size()) << n;
    // Subspace topology on the primes is discrete, like spec(R).
    EXPECT_EQ(subspace_opens(ps.space, primes).size(), std::size_t{1} << sp.points.size()) << n;
  }
}

TEST(RadicalProjection, Examples) {
  Ring z4(make_zmod(4));
  const auto r4 = radical_projection(z4);
  EXPECT_EQ(r4.map.values(), (std::vector<std::size_t>{0, 0}));
  Ring z12(make_zmod(12));
  const auto r12 = radical_projection(z12);
  const auto p12 = primary_space(z12);
  const auto s12 = spec(z12);
  for (std::size_t i = 0; i < p12.points.size(); ++i)
    if (format(z12, p12.points[i]) == "(4)") {
      EXPECT_EQ(format(z12, s12.points[r12.map(i)]), "(2)");
    }
  Ring z5(make_zmod(5));
  EXPECT_EQ(format(z5, spec(z5).points[radical_projection(z5).map(0)]), "(0)");
  for (u64 n = 2; n <= 200; ++n) {
    const auto rp = radical_projection(Ring(make_zmod(n)));
    EXPECT_TRUE(rp.preimage_law && rp.surjective) << n;
  }
  const auto tp = radical_projection(Ring(make_table(table_of(36))));
  EXPECT_TRUE(tp.preimage_law && tp.surjective);
}

TEST(SoberWitness, Examples) {
  Ring z4(make_zmod(4));
  const auto w4 = sober_witness(z4);
  ASSERT_FALSE(w4.sober);
  ASSERT_TRUE(w4.witness);
  const auto p4 = primary_space(z4);
  EXPECT_EQ(format(z4, p4.points[w4.witness->pair.first]), "(2)");
  EXPECT_EQ(format(z4, p4.points[w4.witness->pair.second]), "(0)");
  EXPECT_EQ(w4.witness->closed_set, p4.space.points());

  Ring z9(make_zmod(9));
  const auto w9 = sober_witness(z9);
  const auto p9 = primary_space(z9);
  ASSERT_TRUE(w9.witness);
  EXPECT_EQ(format(z9, p9.points[w9.witness->pair.first]), "(3)");
  EXPECT_EQ(format(z9, p9.points[w9.witness->pair.second]), "(0)");

  EXPECT_TRUE(sober_witness(Ring(make_zmod(6))).sober);
  EXPECT_FALSE(sober_witness(Ring(make_zmod(12))).sober);
}

TEST(SoberWitness, PrimePowers) {
  for (u64 p : {2, 3, 5, 7})
    for (unsigned k = 2; k <= 6; ++k) {
      u64 n = 1;
      for (unsigned i = 0; i < k; ++i) n *= p;
      Ring r(make_zmod(n));
      const auto w = sober_witness(r);
      const auto ps = primary_space(r);
      ASSERT_TRUE(w.witness) << n;
      EXPECT_TRUE(w.closure_law);
      EXPECT_EQ(ps.points[w.witness->pair.first].divisor, p);
      EXPECT_EQ(ps.points[w.witness->pair.second].divisor, n);
      // Every (p^j) is generic, M^2 = (p^2) among them.
      EXPECT_EQ(w.witness->generic_points.size(), k);
    }
}

TEST(SoberWitness, ClosureLawEverywhere) {
  for (u64 n = 2; n <= 300; ++n) ASSERT_TRUE(sober_witness(Ring(make_zmod(n))).closure_law) << n;
  EXPECT_TRUE(sober_witness(Ring(make_table(table_of(48)))).closure_law);
}

TEST(ClosedPoints, AreMaximalButNotConversely) {
  for (u64 n = 2; n <= 200; ++n) EXPECT_TRUE(closed_points_maximal(Ring(make_zmod(n)))) << n;
  EXPECT_TRUE(closed_points_maximal(Ring(make_table(table_of(12)))));
  // (2) is maximal in Z/4 yet its closure also holds (0).
  Ring z4(make_zmod(4));
  const auto ps = primary_space(z4);
  EXPECT_EQ(ps.space.closure(singleton(0)), ps.space.points());
}

TEST(PrimaryJson, Shape) {
  Ring z4(make_zmod(4));
  const json j = to_json(z4, primary_space(z4), sober_witness(z4));
  EXPECT_EQ(j["points"], json({"(2)", "(0)"}));
  EXPECT_EQ(j["sober"], false);
  EXPECT_EQ(j["witness"]["pair"], json({"(2)", "(0)"}));
  EXPECT_EQ(j["opens"].size(), 2U);
}
