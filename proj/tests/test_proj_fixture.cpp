#include <gtest/gtest.h>

#include "clopen/proj_fixture.hpp"

using namespace clopen;
using namespace clopen::proj;

namespace {

// Independent normal form: apply x^2 -> y^2 one degree at a time.
Poly2 slow_square_nf(const Poly2& a, u64 p) {
  Poly2 cur = a;
  bool changed = true;
  while (changed) {
    changed = false;
    Poly2 next;
    for (const auto& [m, c] : cur) {
      if (m.first >= 2) {
        add_term(next, {m.first - 2, m.second + 2}, c, p);
        changed = true;
      } else {
        add_term(next, m, c, p);
      }
    }
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(ProjFixture, NormalFormExample) {
  const auto f = square_fixture(3);
  const Poly2 d = sub(f, var_x(), var_y());
  EXPECT_EQ(format(pow(f, d, 2)), "2y^2+xy");
  EXPECT_EQ(format(mul(f, var_x(), var_y())), "xy");
  EXPECT_TRUE(mul(xy_fixture(5), var_x(), var_y()).empty());
}

TEST(ProjFixture, ClosedFormMatchesSlowRewriting) {
  std::mt19937_64 rng(3);
  for (u64 p : {2, 3, 7}) {
    for (int t = 0; t < 300; ++t) {
      Poly2 a;
      for (int k = 0; k < 5; ++k) add_term(a, {unsigned(rng() % 9), unsigned(rng() % 9)}, rng() % p, p);
      ASSERT_EQ(normal_form(square_fixture(p), a), slow_square_nf(a, p));
    }
  }
}

TEST(ProjFixture, Confluence) {
  for (u64 p : {2, 3, 5}) {
    EXPECT_TRUE(confluence_check(square_fixture(p)));
    EXPECT_TRUE(confluence_check(xy_fixture(p)));
    EXPECT_TRUE(confluence_check(xy_fixture(p, 1, 1)));
  }
}

TEST(ProjFixture, Grading) {
  EXPECT_TRUE(rule_is_graded(square_fixture(3)));
  EXPECT_TRUE(rule_is_graded(xy_fixture(3)));
  EXPECT_FALSE(rule_is_graded(Fixture{Rule::x2_to_y2, 3, 1, 2}));
  const auto f = square_fixture(5);
  EXPECT_EQ(degree(f, add(f, var_x(), var_y())), 1U);
  EXPECT_FALSE(degree(f, add(f, var_x(), mul(f, var_y(), var_y()))));
  EXPECT_THROW(square_fixture(4), Error);
}

TEST(ProjFixture, Parse) {
  EXPECT_EQ(parse("x-y", 3), (Poly2{{{1, 0}, 1}, {{0, 1}, 2}}));
  EXPECT_EQ(parse(" 2x^2y + 3 ", 5), (Poly2{{{2, 1}, 2}, {{0, 0}, 3}}));
  EXPECT_EQ(parse("x*y - x y", 7), Poly2{});
  EXPECT_THROW(parse("", 3), ParseError);
  EXPECT_THROW(parse("x+", 3), ParseError);
  EXPECT_THROW(parse("x^", 3), ParseError);
  EXPECT_THROW(parse("x z", 3), ParseError);
  try {
    parse("x+?", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos) << e.what();
  }
}

TEST(DisconnectionWitness, AcceptsOddCharacteristic) {
  for (u64 p : {3, 5, 7, 11, 13}) {
    const auto f = square_fixture(p);
    const auto w = disconnection_witness(f, sub(f, var_x(), var_y()), add(f, var_x(), var_y()));
    EXPECT_EQ(w.verdict, Verdict::accept) << p << " " << to_json(w).dump();
    EXPECT_TRUE(w.failures.empty());
  }
}

TEST(DisconnectionWitness, RejectsCharacteristicTwo) {
  const auto f = square_fixture(2);
  const Poly2 h = add(f, var_x(), var_y());
  const auto w = disconnection_witness(f, h, h);
  EXPECT_EQ(w.verdict, Verdict::reject);
  ASSERT_FALSE(w.failures.empty());
  EXPECT_NE(w.failures.front().find("^2 = 0"), std::string::npos);
}

TEST(DisconnectionWitness, RejectsWhenProductNonzero) {
  const auto f = square_fixture(5);
  const auto w = disconnection_witness(f, var_x(), var_y());
  EXPECT_EQ(w.verdict, Verdict::reject);
}

TEST(DisconnectionWitness, OtherFixtures) {
  const auto f = xy_fixture(3, 1, 1);
  EXPECT_EQ(disconnection_witness(f, var_x(), mul(f, var_x(), var_x())).verdict, Verdict::reject);
  const auto ok = disconnection_witness(f, var_x(), var_y());
  EXPECT_EQ(ok.verdict, Verdict::accept) << to_json(ok).dump();
  EXPECT_EQ(disconnection_witness(xy_fixture(3), var_y(), var_y()).verdict, Verdict::reject);
}

TEST(DisconnectionWitness, InconclusiveWhenSearchExhausted) {
  // x^3 lies in ((x-y)^3, (x+y)^3) but the search stops at exponent 2.
  const auto sq = square_fixture(3);
  const Poly2 a = sub(sq, var_x(), var_y()), b = add(sq, var_x(), var_y());
  const auto w = disconnection_witness(sq, pow(sq, a, 3), pow(sq, b, 3));
  EXPECT_EQ(w.verdict, Verdict::inconclusive) << to_json(w).dump();
  EXPECT_FALSE(radical_certificate(sq, var_x(), pow(sq, a, 2), pow(sq, b, 2), 1));
  EXPECT_TRUE(radical_certificate(sq, var_x(), pow(sq, a, 2), pow(sq, b, 2), 2));
}

TEST(DisconnectionWitness, RejectsBadInput) {
  const auto f = square_fixture(3);
  EXPECT_THROW(disconnection_witness(f, add(f, var_x(), mul(f, var_y(), var_y())), var_y()), Error);
  EXPECT_THROW(disconnection_witness(f, Poly2{{{0, 0}, 1}}, var_y()), Error);
  EXPECT_EQ(disconnection_witness(f, Poly2{}, var_y()).verdict, Verdict::reject);
}

TEST(ProjMembership, Examples) {
  const auto xy = xy_fixture(5);
  EXPECT_FALSE(proj_membership_check(xy, MinimalPrime::y));
  EXPECT_TRUE(proj_membership_check(xy, MinimalPrime::x));
  const auto sq = square_fixture(5);
  EXPECT_TRUE(proj_membership_check(sq, MinimalPrime::x_minus_y));
  EXPECT_TRUE(proj_membership_check(sq, MinimalPrime::x_plus_y));
  EXPECT_THROW(proj_membership_check(sq, MinimalPrime::x), Error);
  EXPECT_TRUE(prime_contains(sq, MinimalPrime::x_minus_y, sub(sq, var_x(), var_y())));
  EXPECT_FALSE(prime_contains(sq, MinimalPrime::x_minus_y, var_x()));
}

TEST(ComponentLift, Examples) {
  const auto z12 = component_lift_check(Ring(make_zmod(12)), 2);
  EXPECT_TRUE(z12.report.pass) << to_json(z12.report).dump();
  EXPECT_EQ(z12.components, 2U);
  EXPECT_EQ(component_lift_check(Ring(make_zmod(5)), 1).components, 1U);
  const auto poly = component_lift_check(Ring(make_poly_quot(2, {0, 1, 0, 1})), 1);
  EXPECT_TRUE(poly.report.pass);
  EXPECT_EQ(poly.components, 2U);
  for (u64 n : {2, 6, 30, 36, 210}) EXPECT_TRUE(component_lift_check(Ring(make_zmod(n)), 0).report.pass) << n;
}

TEST(IntegralDomain, Check) {
  for (u64 p : {2, 3, 5, 7}) EXPECT_TRUE(integral_domain_irreducibility_check(p, 2));
  EXPECT_THROW(integral_domain_irreducibility_check(4, 2), Error);
  // Z/4 coefficients do have zero divisors among polynomials.
  const Ring z4(make_zmod(4));
  const MPoly two{{{0}, RingElem{{2}}}};
  EXPECT_TRUE(mpoly_mul(z4, two, two).empty());
}
