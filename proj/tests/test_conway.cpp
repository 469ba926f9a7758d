#include <gtest/gtest.h>

#include "strlink/conway.hpp"
#include "strlink/fixtures.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(Conway, Unknot) {
  const ConwayPoly p = conway(close(TangleWord::identity(1)));
  EXPECT_EQ(p.coefficient(0), 1);
  EXPECT_EQ(p.coefficient(2), 0);
  EXPECT_EQ(knot_conway(close(TangleWord::identity(1))), p);
}

TEST(Conway, TrefoilAndFigureEight) {
  EXPECT_EQ(casson_knot(close(fixtures::long_trefoil())), 1);
  EXPECT_EQ(casson_knot(close(fixtures::long_figure_eight())), -1);
  EXPECT_EQ(knot_conway(close(fixtures::long_trefoil())).coefficient(2), 1);
  EXPECT_EQ(knot_conway(close(fixtures::long_figure_eight())).coefficient(2), -1);
}

TEST(Conway, MirrorInvariantForKnots) {
  EXPECT_EQ(casson_knot(close(mirror(fixtures::long_trefoil()))), 1);
}

TEST(Conway, ConnectedSumAddsCasson) {
  const TangleWord t = fixtures::long_trefoil();
  const TangleWord tt = stack(t, t);
  EXPECT_EQ(casson_knot(close(tt)), 2);
  const ConwayPoly p = knot_conway(close(tt));
  EXPECT_EQ(p.coefficient(2), 2);
  EXPECT_EQ(p.coefficient(4), 1);
}

TEST(Conway, KnotRouteMatchesSkein) {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const TangleWord w = close(random_string_link(rng, {1, 2, 12, 3}));
    EXPECT_EQ(knot_conway(w), conway(w));
  }
}

TEST(Conway, LinearTermIsLinkingNumber) {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    const TangleWord w = random_string_link(rng, {2, 2, 10, 2});
    const ConwayPoly p = conway(close(w));
    EXPECT_EQ(p.coefficient(0), 0);
    EXPECT_EQ(p.coefficient(1), linking(w, 1, 2));
  }
}

TEST(Conway, SplitLinkVanishes) {
  EXPECT_TRUE(conway(close(TangleWord::identity(2))).is_zero());
  EXPECT_TRUE(conway(close(fixtures::whitehead())).coefficient(1) == 0);
}

TEST(Conway, HopfLink) {
  EXPECT_EQ(conway(close(fixtures::clasp(1))).coefficient(1), 1);
  EXPECT_EQ(conway(close(fixtures::clasp(-1))).coefficient(1), -1);
}

TEST(Conway, SkeinOnGaussCode) {
  const GaussCode g = gauss_code(close(fixtures::whitehead()));
  for (int x = 0; x < static_cast<int>(g.sign.size()); ++x) {
    const ConwayPoly plus = conway(g), minus = conway(switch_code(g, x)), zero = conway(smooth_code(g, x));
    for (int k = 0; k < 8; ++k) {
      const std::int64_t lhs = g.sign[static_cast<std::size_t>(x)] > 0
                                   ? plus.coefficient(k) - minus.coefficient(k)
                                   : minus.coefficient(k) - plus.coefficient(k);
      EXPECT_EQ(lhs, zero.coefficient(k - 1));
    }
  }
}

TEST(Conway, BudgetExceeded) {
  TangleWord big = fixtures::long_trefoil();
  for (int k = 0; k < 6; ++k) big = stack(big, fixtures::long_trefoil());
  EXPECT_EQ(code_of([&] { conway(close(big)); }), ErrorCode::RecursionBudgetExceeded);
  EXPECT_EQ(knot_conway(close(big)).coefficient(2), 7);
}

TEST(Conway, ErrorCases) {
  EXPECT_EQ(code_of([] { conway(fixtures::clasp(1)); }), ErrorCode::NotClosed);
  EXPECT_EQ(code_of([] { knot_conway(close(fixtures::clasp(1))); }), ErrorCode::MultiComponent);
  EXPECT_EQ(code_of([] { casson_knot(close(fixtures::clasp(1))); }), ErrorCode::MultiComponent);
  const TangleWord s = close(make_double(fixtures::long_trefoil(), 0));
  EXPECT_EQ(code_of([&] { conway(s); }), ErrorCode::SingularInput);
}
