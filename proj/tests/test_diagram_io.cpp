#include <filesystem>

#include <gtest/gtest.h>

#include "strlink/diagram_io.hpp"
#include "strlink/fixtures.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(Parse, FixtureTexts) {
  for (const std::string& name : fixtures::fixture_names()) {
    const TangleWord w = fixtures::fixture(name);
    EXPECT_NO_THROW(validate(w)) << name;
  }
}

TEST(Parse, HeaderAndComments) {
  const TangleWord w = parse_or_throw("# a clasp\nstrands 2\nX+ 1  # first\n\nX+ 1\n");
  EXPECT_EQ(w.strands, 2);
  EXPECT_EQ(w.crossing_count(), 2);
  EXPECT_EQ(linking(w, 1, 2), 1);
}

TEST(Parse, ClosedAndSingularFlags) {
  const TangleWord c = parse_or_throw("strands 0 closed\nU 1\nA 1\n");
  EXPECT_TRUE(c.closed);
  const TangleWord s = parse_or_throw("strands 2 singular\nXD 1\nX+ 1\n");
  EXPECT_TRUE(s.singular);
  EXPECT_EQ(s.double_point_count(), 1);
}

TEST(Parse, PositionZeroIsSyntaxErrorWithLine) {
  const ParseResult r = parse_diagram("strands 2\nX+ 0\n");
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].line, 2);
  EXPECT_EQ(code_of([] { parse_or_throw("strands 2\nX+ 0\n"); }), ErrorCode::SyntaxError);
}

TEST(Parse, UnknownTokenIsSyntaxError) {
  EXPECT_EQ(code_of([] { parse_or_throw("strands 2\nY 1\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_or_throw("X+ 1\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_or_throw("strands 2\nX+ 2\n"); }), ErrorCode::SyntaxError);
}

TEST(Parse, NonStringLinkIsSemanticError) {
  EXPECT_EQ(code_of([] { parse_or_throw("strands 2\nX+ 1\n"); }), ErrorCode::SemanticError);
}

TEST(Serialize, RoundTrip) {
  for (const std::string& name : fixtures::fixture_names()) {
    const TangleWord w = fixtures::fixture(name);
    EXPECT_EQ(parse_or_throw(serialize(w)), w) << name;
  }
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    const TangleWord w = random_string_link(rng, {1 + k % 4, 2, 14, 3});
    EXPECT_EQ(parse_or_throw(serialize(w)), w);
    const TangleWord c = close(w);
    EXPECT_EQ(parse_or_throw(serialize(c)), c);
  }
}

TEST(Serialize, RepoFixturesMatchBuiltins) {
  const std::filesystem::path dir = std::filesystem::path(STRLINK_SOURCE_DIR) / "fixtures";
  for (const std::string& name : fixtures::fixture_names())
    EXPECT_EQ(load_diagram((dir / (name + ".tw")).string()), fixtures::fixture(name)) << name;
}

TEST(Report, KeysAndOrder) {
  const std::string r = emit_report({{"mu", {1, 2, 3}, 1}, {"V2", {1, 2}, 1}, {"const", {}, 0}});
  EXPECT_EQ(r, "V2[1,2] = 1\nconst = 0\nmu[1,2,3] = 1\n");
}

TEST(Report, WhiteheadInvariants) {
  std::vector<ReportRecord> rec;
  for (const InvariantValue& v : all_invariants(fixtures::whitehead())) rec.push_back({v.name, v.indices, v.value});
  EXPECT_NE(emit_report(rec).find("V2[1,2] = 1\n"), std::string::npos);
}

TEST(Report, BorromeanInvariants) {
  std::vector<ReportRecord> rec;
  for (const InvariantValue& v : all_invariants(fixtures::borromean())) rec.push_back({v.name, v.indices, v.value});
  EXPECT_NE(emit_report(rec).find("mu[1,2,3] = 1\n"), std::string::npos);
}
