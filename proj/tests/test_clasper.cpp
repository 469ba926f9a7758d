#include <gtest/gtest.h>

#include "strlink/clasper.hpp"
#include "strlink/fixtures.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(Struts, Normalize) {
  const A1Element x = a1_normalize({{{2, 1}, 3}, {{1, 2}, -1}, {{2, 2}, 5}}, 2);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.at({1, 2}), 2);
  EXPECT_TRUE(a1_normalize({{{1, 2}, 1}, {{2, 1}, -1}}, 2).empty());
}

TEST(YDiagrams, AntisymmetryAndCyclicity) {
  const auto [s1, y1] = a2_normal(YDiagram::distinct(2, 1, 3), 3);
  EXPECT_EQ(s1, -1);
  EXPECT_EQ(y1, YDiagram::distinct(1, 2, 3));
  const auto [s2, y2] = a2_normal(YDiagram::distinct(2, 3, 1), 3);
  EXPECT_EQ(s2, 1);
  EXPECT_EQ(y2, YDiagram::distinct(1, 2, 3));
}

TEST(YDiagrams, PairNormalForm) {
  const auto [s, y] = a2_normal(YDiagram::pair(1, 2, 1, 2), 2);
  EXPECT_EQ(y, YDiagram::pair(1, 1, 2, 2));
  EXPECT_EQ(s, -1);
}

TEST(YDiagrams, EtaRules) {
  const ClassVector a = eta(YDiagram::distinct(1, 2, 3), 3);
  EXPECT_EQ(a.wedge.at({1, 2, 3}), 1);
  EXPECT_TRUE(a.sym.empty() || std::all_of(a.sym.begin(), a.sym.end(), [](auto& kv) { return kv.second == 0; }));
  const ClassVector t = eta(YDiagram::triple(1, 1, 2, 3), 1);
  EXPECT_NE(t, ClassVector::zero(1));
  EXPECT_EQ(eta(YDiagram::distinct(2, 1, 3), 3).wedge.at({1, 2, 3}), -1);
}

TEST(YDiagrams, EtaIsWellDefined) {
  for (int n = 1; n <= 3; ++n)
    for (const YDiagram& y : all_ydiagrams(n)) {
      const auto [s, b] = a2_normal(y, n);
      const ClassVector e = eta(y, n), f = eta(b, n);
      for (std::size_t k = 0; k < e.coordinates().size(); ++k)
        EXPECT_EQ(e.coordinates()[k], s * f.coordinates()[k]) << y.str();
    }
}

TEST(YDiagrams, Ranks) {
  EXPECT_EQ(a2_basis(2).size(), 3u);
  EXPECT_EQ(a2_rank(2), 3u);
  EXPECT_EQ(a2_rank(3), 7u);
  EXPECT_EQ(a2_rank(4), 14u);
  EXPECT_EQ(ClassVector::dimension(3), 7u);
  EXPECT_EQ(ClassVector::dimension(4), 14u);
}

TEST(Representatives, Struts) {
  const TangleWord w = psi1_rep({1, 3}, 3);
  EXPECT_EQ(linking(w, 1, 3), -1);
  EXPECT_EQ(linking(w, 1, 2), 0);
  const A1Element m = mu2_vector(w);
  EXPECT_EQ(m.at({1, 3}), 1);
}

TEST(Representatives, RealizeEta) {
  for (int n = 1; n <= 3; ++n)
    for (const YDiagram& y : all_ydiagrams(n)) {
      const TangleWord w = psi2_rep(y, n);
      EXPECT_TRUE(mu2_vector(w).empty()) << y.str();
      EXPECT_EQ(invariant_vector(w), eta(y, n)) << y.str();
    }
}

TEST(Classification, Whitehead) {
  const ClassVector a = invariant_vector(fixtures::whitehead());
  const ClassVector b = invariant_vector(reverse_strings(fixtures::whitehead()));
  EXPECT_EQ(a.sym.at({1, 2}), -1);
  EXPECT_EQ(b.sym.at({1, 2}), -1);
  EXPECT_TRUE(c3_equivalent(fixtures::whitehead(), reverse_strings(fixtures::whitehead())));
  EXPECT_FALSE(c3_equivalent(fixtures::whitehead(), fixtures::whitehead_figure_eight()));
}

TEST(Classification, C2) {
  EXPECT_TRUE(c2_equivalent(fixtures::whitehead(), TangleWord::identity(2)));
  EXPECT_FALSE(c2_equivalent(fixtures::clasp(1), TangleWord::identity(2)));
  EXPECT_TRUE(c2_equivalent(fixtures::clasp(1), mutate(fixtures::clasp(1), 3, 30)));
}

TEST(Classification, C3) {
  const TangleWord b = fixtures::borromean();
  EXPECT_TRUE(c3_equivalent(b, mutate(b, 9, 60)));
  EXPECT_FALSE(c3_equivalent(b, TangleWord::identity(3)));
  EXPECT_TRUE(c3_equivalent(stack(b, fixtures::fixture("borromean_inverse")), TangleWord::identity(3)));
  EXPECT_EQ(code_of([] { c3_equivalent(fixtures::clasp(1), TangleWord::identity(2)); }), ErrorCode::NotInSL2);
}

TEST(Classification, Format) {
  EXPECT_EQ(format(mu2_vector(fixtures::clasp(1))), "I[1,2] = -1\n");
  EXPECT_NE(format(invariant_vector(fixtures::borromean())).find("wedge[1,2,3] = 1"), std::string::npos);
}
