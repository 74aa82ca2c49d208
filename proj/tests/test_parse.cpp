#include <gtest/gtest.h>

#include <algorithm>

#include "clopen/dot.hpp"
#include "clopen/parse.hpp"

using namespace clopen;

namespace {

const std::string data_dir = CLOPEN_TEST_DATA;

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t parse_column(const std::string& text) {
  try {
    parse_ring_desc(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return std::string::npos;
}

}  // namespace

TEST(ParseRingDesc, Examples) {
  EXPECT_EQ(parse_ring_desc("Z/12"), make_zmod(12));
  EXPECT_EQ(parse_ring_desc("GF(2)[x]/(x^3+x)"), make_poly_quot(2, {0, 1, 0, 1}));
  EXPECT_EQ(parse_ring_desc("Z/4 x GF(3)"), make_product({make_zmod(4), make_zmod(3)}));
  EXPECT_EQ(parse_ring_desc("GF(5)[x]/(x^2 - 1)"), make_poly_quot(5, {4, 0, 1}));
  EXPECT_EQ(parse_ring_desc("GF(3)[x]/(x^9-x^3)"), make_poly_quot(3, {0, 0, 0, 2, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(parse_ring_desc("  GF(7)[x]/(2*x+3+x^2+x) "), make_poly_quot(7, {3, 3, 1}));
}

TEST(ParseRingDesc, ProductsAreLeftAssociative) {
  const auto a = make_zmod(2), b = make_zmod(3), c = make_zmod(5);
  EXPECT_EQ(parse_ring_desc("Z/2 x Z/3 x Z/5"), make_product({make_product({a, b}), c}));
  EXPECT_EQ(parse_ring_desc("Z/2 x (Z/3 x Z/5)"), make_product({a, make_product({b, c})}));
  EXPECT_EQ(parse_ring_desc("((Z/2))"), a);
}

TEST(ParseRingDesc, Tables) {
  const auto d = parse_ring_desc("table:" + data_dir + "/dual_numbers.json");
  ASSERT_TRUE(std::holds_alternative<TableRing>(d.kind));
  EXPECT_EQ(std::get<TableRing>(d.kind).size, 4U);
  EXPECT_EQ(Ring(d).name(), "table:" + data_dir + "/dual_numbers.json");
  const auto prod = parse_ring_desc("(table:" + data_dir + "/dual_numbers.json x Z/3)");
  EXPECT_EQ(Ring(prod).size(), 12U);
  try {
    parse_ring_desc("table:" + data_dir + "/broken_z4.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
    EXPECT_NE(std::string(e.what()).find("ring axiom violated"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_ring_desc("table:" + data_dir + "/missing.json"), Error);
}

TEST(ParseRingDesc, Errors) {
  EXPECT_EQ(parse_column("Z/"), 2U);
  EXPECT_EQ(parse_column("Z/12 x"), 6U);
  EXPECT_EQ(parse_column("Q/3"), 0U);
  EXPECT_EQ(parse_column("GF(2)[x]/(x^2+)"), 14U);
  EXPECT_EQ(parse_column("Z/4 Z/5"), 4U);
  EXPECT_EQ(parse_column("(Z/4"), 4U);
  EXPECT_EQ(parse_column("Z/99999999999999999999999"), 2U);
  for (const char* bad : {"GF(4)[x]/(x^2+x+1)", "GF(3)[x]/(2x^2+1)", "GF(6)", "Z/1", "GF(2)[x]/(1)"}) {
    try {
      parse_ring_desc(bad);
      ADD_FAILURE() << bad;
    } catch (const ParseError& e) {
      ADD_FAILURE() << bad << " " << e.what();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_input) << bad;
      EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
  }
  try {
    parse_ring_desc("GF(3)[x]/(2x^2+1)");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("monic"), std::string::npos);
  }
}

TEST(ParseRingDesc, RenderRoundTrip) {
  for (const char* text : {"Z/12", "GF(2)[x]/(x^3+x)", "Z/4 x GF(3)", "Z/2 x Z/3 x Z/5", "Z/2 x (Z/3 x Z/5)",
                           "(Z/2 x Z/2) x Z/9", "GF(5)[x]/(x^4+4) x (Z/6 x GF(2)[x]/(x^2+x+1))",
                           "GF(3)[x]/(x^2 - 1) x Z/8"}) {
    const auto d = parse_ring_desc(text);
    EXPECT_EQ(parse_ring_desc(to_string(d)), d) << text << " -> " << to_string(d);
  }
  const std::string t = "table:" + data_dir + "/dual_numbers.json x Z/2";
  EXPECT_EQ(parse_ring_desc(to_string(parse_ring_desc(t))), parse_ring_desc(t));
}

TEST(SpaceJson, OpensAndSubbasis) {
  const auto pc = space_from_json(read_json_file(data_dir + "/pseudocircle.json"));
  EXPECT_EQ(pc.opens().size(), 7U);
  const auto sp = space_from_json(read_json_file(data_dir + "/sierpinski_plus_point.json"));
  EXPECT_EQ(sp, from_subbasis(3, {0b010, 0b011, 0b100}));
  EXPECT_EQ(space_from_json(space_to_json(pc)), pc);
  EXPECT_THROW(space_from_json(json{{"n", 2}, {"opens", {{0}, {0, 1}}}}), Error);  // no empty set
  EXPECT_THROW(space_from_json(json{{"n", 2}, {"subbasis", {{0, 5}}}}), Error);
  EXPECT_THROW(space_from_json(json{{"n", 2}}), Error);
  EXPECT_THROW(space_from_json(json{{"n", "two"}, {"opens", json::array()}}), Error);
  EXPECT_THROW(read_json_file(data_dir + "/missing.json"), Error);
}

TEST(EmitDot, Sierpinski) {
  const auto g = specialization_graph(from_subbasis(2, {0b10}));
  EXPECT_EQ(g.edges.size(), 1U);
  EXPECT_EQ(g.edges.front(), (std::pair<std::size_t, std::size_t>{1, 0}));
  EXPECT_EQ(count(emit_dot(from_subbasis(2, {0b10})), " -> "), 1U);
}

TEST(EmitDot, DiscreteTwoPoint) {
  const auto x = FiniteSpace::discrete(2);
  const auto dot = emit_dot(x, {"a", "b"});
  EXPECT_EQ(count(dot, " -> "), 0U);
  EXPECT_EQ(count(dot, "subgraph cluster_"), 2U);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
}

TEST(EmitDot, Pseudocircle) {
  const auto x = space_from_json(read_json_file(data_dir + "/pseudocircle.json"));
  const auto g = specialization_graph(x);
  EXPECT_EQ(g.edges.size(), 4U);
  EXPECT_EQ(g.clusters.size(), 1U);
  const auto dot = emit_dot(x);
  EXPECT_EQ(count(dot, "[label="), 4U);
  EXPECT_EQ(count(dot, " -> "), 4U);
}

TEST(EmitDot, ChainIsTransitivelyReduced) {
  // 0 in cl{1}, 1 in cl{2}: the edge 2 -> 0 is implied.
  const auto chain = from_subbasis(3, {0b100, 0b110});
  EXPECT_EQ(specialization_graph(chain).edges.size(), 2U);
  const auto indiscrete = FiniteSpace::indiscrete(3);
  const auto g = specialization_graph(indiscrete);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.equivalences.size(), 2U);
}
