#include <gtest/gtest.h>

#include "strlink/conway.hpp"
#include "strlink/fixtures.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"

#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(Validate, IdentityHasNoCrossings) {
  const StrandTrace st = validate(TangleWord::identity(3));
  EXPECT_EQ(st.components, 3);
  EXPECT_TRUE(st.crossings.empty());
}

TEST(Validate, TrefoilIsOneString) {
  const StrandTrace st = validate(fixtures::long_trefoil());
  EXPECT_EQ(st.components, 1);
  EXPECT_EQ(st.crossings.size(), 3u);
  EXPECT_EQ(st.visits[0].size(), 6u);
}

TEST(Validate, RejectsPermutedStrands) {
  TangleWord w;
  w.strands = 2;
  w.events = {{EventKind::CrossPos, 1}};
  EXPECT_EQ(code_of([&] { validate(w); }), ErrorCode::NotAStringLink);
}

TEST(Validate, RejectsPositionOutOfRange) {
  TangleWord w;
  w.strands = 2;
  w.events = {{EventKind::CrossPos, 2}};
  EXPECT_EQ(code_of([&] { validate(w); }), ErrorCode::MalformedWord);
}

TEST(Stack, IdentityIsUnit) {
  const TangleWord w = fixtures::whitehead();
  EXPECT_EQ(stack(TangleWord::identity(2), w), w);
  EXPECT_EQ(stack(w, TangleWord::identity(2)), w);
}

TEST(Stack, ClaspAndMirrorUnlink) {
  const TangleWord s = stack(fixtures::clasp(1), fixtures::clasp(-1));
  EXPECT_EQ(linking(s, 1, 2), 0);
  EXPECT_EQ(s.crossing_count(), 4);
}

TEST(Stack, ArityMismatch) {
  EXPECT_EQ(code_of([] { stack(TangleWord::identity(2), TangleWord::identity(3)); }), ErrorCode::ArityMismatch);
}

TEST(Stack, CrossingMultisetIsUnion) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const TangleWord a = random_string_link(rng, {3, 2, 8, 2}), b = random_string_link(rng, {3, 2, 8, 2});
    EXPECT_EQ(stack(a, b).crossing_count(), a.crossing_count() + b.crossing_count());
    EXPECT_EQ(linking(stack(a, b), 1, 3), linking(a, 1, 3) + linking(b, 1, 3));
  }
}

TEST(Closures, PlatOfWhiteheadIsTrefoil) {
  EXPECT_EQ(knot_conway(plat_close(fixtures::whitehead())).coefficient(2), 1);
  EXPECT_EQ(conway(plat_close(fixtures::whitehead())).coefficient(2), 1);
}

TEST(Closures, PlatOfSmallWhiteheadIsFigureEight) {
  EXPECT_EQ(conway(plat_close(fixtures::whitehead_figure_eight())).coefficient(2), -1);
}

TEST(Closures, PlatNeedsTwoStrings) {
  EXPECT_EQ(code_of([] { plat_close(TangleWord::identity(1)); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([] { plat_close(TangleWord::identity(3)); }), ErrorCode::ArityMismatch);
}

TEST(Closures, CloseKeepsComponents) {
  const TangleWord c = close(fixtures::borromean());
  EXPECT_TRUE(c.closed);
  EXPECT_EQ(validate(c).components, 3);
  EXPECT_EQ(c.crossing_count(), 6);
}

TEST(Curl, TrivialTwoStrings) {
  const TangleWord c = curl(TangleWord::identity(2));
  EXPECT_EQ(c.strands, 1);
  ASSERT_EQ(c.crossing_count(), 1);
  EXPECT_EQ(validate(c).crossings[0].sign, 1);
  EXPECT_EQ(casson_def(c), 0);
}

TEST(Curl, AddsPositiveCrossingsOnly) {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 4;
    const TangleWord w = random_string_link(rng, {n, 2, 10, 2});
    const TangleWord c = curl(w);
    EXPECT_EQ(c.crossing_count(), w.crossing_count() + n - 1);
    int pos_w = 0, pos_c = 0;
    for (const auto& x : validate(w).crossings) pos_w += x.sign > 0;
    for (const auto& x : validate(c).crossings) pos_c += x.sign > 0;
    EXPECT_EQ(pos_c - pos_w, n - 1);
  }
}

TEST(Tilde, TrivialGivesTrivial) {
  const TangleWord t = tilde(TangleWord::identity(3), -1);
  EXPECT_EQ(t.strands, 2);
  EXPECT_EQ(linking(t, 1, 2), 0);
  EXPECT_EQ(v2_def(t), 0);
}

TEST(Tilde, BorromeanGivesMinusOne) { EXPECT_EQ(v2_def(tilde(fixtures::borromean(), -1)), -1); }

TEST(Tilde, NeedsThreeStrings) {
  EXPECT_EQ(code_of([] { tilde(TangleWord::identity(2), -1); }), ErrorCode::ArityMismatch);
}

TEST(Sublink, OfIdentity) {
  const int keep[] = {1, 3};
  EXPECT_EQ(sublink(TangleWord::identity(4), keep), TangleWord::identity(2));
}

TEST(Sublink, BorromeanPairsAreTrivial) {
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const int keep[] = {i, j};
    const TangleWord s = sublink(fixtures::borromean(), keep);
    EXPECT_EQ(linking(s, 1, 2), 0);
    EXPECT_EQ(v2_def(s), 0);
    EXPECT_TRUE(conway(close(s)).is_zero());
  }
}

TEST(Sublink, AllStringsIsIdentity) {
  const int keep[] = {1, 2, 3};
  EXPECT_EQ(sublink(fixtures::borromean(), keep), fixtures::borromean());
}

TEST(Sublink, EmptySelection) {
  EXPECT_EQ(code_of([] { sublink(TangleWord::identity(2), std::span<const int>{}); }), ErrorCode::EmptySelection);
}

TEST(Crossings, SwitchIsInvolution) {
  const TangleWord w = fixtures::whitehead();
  for (int x = 0; x < w.crossing_count(); ++x) EXPECT_EQ(switch_crossing(switch_crossing(w, x), x), w);
  EXPECT_EQ(code_of([&] { switch_crossing(w, 99); }), ErrorCode::BadCrossingId);
}

TEST(Crossings, SmoothingOneCrossingUnknot) {
  TangleWord u;
  u.closed = true;
  u.events = {{EventKind::Cup, 1}, {EventKind::Cup, 3}, {EventKind::CrossPos, 2}, {EventKind::Cap, 3},
              {EventKind::Cap, 1}};
  ASSERT_EQ(validate(u).components, 1);
  const TangleWord s = smooth(u, 0);
  EXPECT_EQ(validate(s).components, 2);
  EXPECT_TRUE(conway(s).is_zero());
}

TEST(Crossings, DoubleResolvesBack) {
  const TangleWord w = fixtures::clasp(1);
  const TangleWord d = make_double(w, 0);
  EXPECT_TRUE(d.singular);
  EXPECT_EQ(resolve_double(d, 0, 1), w);
}

TEST(Mutate, ZeroMovesIsIdentity) {
  const TangleWord w = fixtures::borromean();
  EXPECT_EQ(mutate(w, 5, 0), w);
}

TEST(Mutate, PreservesLinkingAndValidity) {
  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const TangleWord w = random_string_link(rng, {3, 2, 12, 3});
    const TangleWord m = mutate(w, 100 + k, 100);
    EXPECT_NO_THROW(validate(m));
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) EXPECT_EQ(linking(m, i, j), linking(w, i, j));
  }
}

TEST(Geometry, RoundTrip) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const TangleWord w = random_string_link(rng, {1 + k % 4, 2, 12, 3});
    EXPECT_EQ(from_geometric(to_geometric(w)), w);
  }
}

TEST(Geometry, ReverseStringsKeepsV2) {
  EXPECT_EQ(v2_def(reverse_strings(fixtures::whitehead())), 1);
  EXPECT_EQ(v2_def(reverse_strings(fixtures::whitehead_figure_eight())), -1);
  EXPECT_EQ(reverse_strings(reverse_strings(fixtures::whitehead())), fixtures::whitehead());
}

TEST(Fixtures, EmbedKeepsOtherStringsSplit) {
  const int at[] = {1, 2, 4};
  const TangleWord e = fixtures::embed(fixtures::borromean(), 4, at);
  EXPECT_EQ(milnor(e, 1, 2, 4), 1);
  EXPECT_EQ(milnor(e, 1, 2, 3), 0);
  EXPECT_EQ(milnor(e, 1, 3, 4), 0);
  EXPECT_EQ(milnor(e, 2, 3, 4), 0);
}
