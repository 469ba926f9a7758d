#include <gtest/gtest.h>

#include "strlink/fixtures.hpp"
#include "strlink/gauss.hpp"
#include "strlink/moves.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(GaussData, TrefoilSignsAndStrings) {
  const auto d = gauss_data(fixtures::long_trefoil());
  ASSERT_EQ(d.size(), 3u);
  for (const CrossingDatum& x : d) {
    EXPECT_EQ(x.epsilon, d[0].epsilon);
    EXPECT_EQ(x.strings, std::make_pair(1, 1));
    EXPECT_EQ(x.ctype, CrossingType::Other);
  }
}

TEST(GaussData, MirrorFlipsSignsAndOverness) {
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const TangleWord w = random_string_link(rng, {1 + k % 3, 2, 10, 2});
    const auto a = gauss_data(w), b = gauss_data(mirror(w));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      EXPECT_EQ(b[x].epsilon, -a[x].epsilon);
      EXPECT_EQ(b[x].delta_tilde, 1 - a[x].delta_tilde);
      EXPECT_EQ(b[x].strings, a[x].strings);
    }
  }
}

TEST(GaussData, CrossingTypesOnThreeStrings) {
  const auto d = gauss_data(fixtures::borromean());
  int t1 = 0, t2 = 0, other = 0;
  for (const CrossingDatum& x : d) {
    if (x.ctype == CrossingType::Type1) {
      ++t1;
      EXPECT_EQ(x.strings, std::make_pair(1, 3));
    } else if (x.ctype == CrossingType::Type2) {
      ++t2;
      EXPECT_EQ(x.strings, std::make_pair(2, 3));
    } else {
      ++other;
      EXPECT_EQ(x.strings, std::make_pair(1, 2));
    }
  }
  EXPECT_EQ(t1 + t2 + other, 6);
  EXPECT_GT(t1, 0);
  EXPECT_GT(t2, 0);
}

TEST(GaussData, EffectiveDelta) {
  CrossingDatum d;
  d.delta_tilde = 1;
  d.ctype = CrossingType::Other;
  EXPECT_EQ(effective_delta(d, 0), 1);
  d.ctype = CrossingType::Type1;
  EXPECT_EQ(effective_delta(d, 0), 0);
  EXPECT_EQ(effective_delta(d, 1), 1);
  d.ctype = CrossingType::Type2;
  EXPECT_EQ(effective_delta(d, 0), 0);
  d.delta_tilde = 0;
  EXPECT_EQ(effective_delta(d, 1), 1);
}

TEST(GaussData, RejectsSingularAndClosed) {
  const TangleWord s = make_double(fixtures::clasp(1), 0);
  EXPECT_EQ(code_of([&] { gauss_data(s); }), ErrorCode::SingularInput);
  EXPECT_EQ(code_of([] { gauss_data(close(fixtures::clasp(1))); }), ErrorCode::ArityMismatch);
}

TEST(ChordClasses, KeysRoundTrip) {
  for (int n = 1; n <= 3; ++n)
    for (const ChordClass& c : enumerate_classes(n, 2)) EXPECT_EQ(ChordClass::parse(c.key()), c);
}

TEST(ChordClasses, EnumerationCounts) {
  EXPECT_EQ(enumerate_classes(1, 0).size(), 1u);
  EXPECT_EQ(enumerate_classes(1, 1).size(), 1u);
  EXPECT_EQ(enumerate_classes(2, 1).size(), 3u);
  // parallel, crossed and nested
  EXPECT_EQ(enumerate_classes(1, 2).size(), 3u);
  EXPECT_EQ(code_of([] { enumerate_classes(2, 3); }), ErrorCode::ArityMismatch);
}

TEST(ChordClasses, Canonicalization) {
  const ChordClass c = ChordClass::canonical(2, {{{2, 40}, {1, 7}}, {{1, 9}, {2, 10}}});
  EXPECT_EQ(c, ChordClass::parse("n2:(1.1-2.2)(1.2-2.1)"));
  EXPECT_FALSE(c.has_isolated_chord());
  EXPECT_EQ(c.support(), (std::vector<int>{1, 2}));
}

TEST(ChordClasses, IsolatedChord) {
  EXPECT_TRUE(ChordClass::parse("n1:(1.1-1.2)(1.3-1.4)").has_isolated_chord());
  EXPECT_FALSE(ChordClass::parse("n1:(1.1-1.3)(1.2-1.4)").has_isolated_chord());
  EXPECT_FALSE(ChordClass::parse("n2:(1.1-2.1)(1.2-2.2)").has_isolated_chord());
}

TEST(ChordClasses, OfCrossingPairs) {
  const TangleWord w = fixtures::long_trefoil();
  EXPECT_EQ(chord_class(w, 0, 1).key(), "n1:(1.1-1.3)(1.2-1.4)");
  const ChordClass c = chord_class(fixtures::clasp(1), 0, 1);
  EXPECT_EQ(c.order(), 2);
  EXPECT_EQ(c.support(), (std::vector<int>{1, 2}));
}

TEST(ChordClasses, SingularClass) {
  const TangleWord s = make_double(make_double(fixtures::long_trefoil(), 0), 1);
  EXPECT_EQ(singular_class(s), chord_class(fixtures::long_trefoil(), 0, 1));
}

TEST(FourTerm, RelationsAreNonTrivial) {
  for (int n = 1; n <= 3; ++n) {
    const auto rel = four_term_relations(n);
    EXPECT_FALSE(rel.empty());
    for (const FourTermRelation& r : rel) EXPECT_GE(r.terms.size(), 2u);
  }
}
