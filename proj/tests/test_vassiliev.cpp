#include <gtest/gtest.h>

#include "strlink/fixtures.hpp"
#include "strlink/milnor.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

TEST(Casson, Fixtures) {
  EXPECT_EQ(casson_long(fixtures::long_trefoil()), 1);
  EXPECT_EQ(casson_long(fixtures::long_figure_eight()), -1);
  EXPECT_EQ(casson_def(fixtures::long_trefoil()), 1);
  EXPECT_EQ(casson_long(TangleWord::identity(1)), 0);
}

TEST(Casson, LannesMatchesDefinition) {
  Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    const TangleWord w = random_string_link(rng, {1, 2, 12, 3});
    EXPECT_EQ(casson_long(w), casson_def(w));
  }
}

TEST(V2, Fixtures) {
  EXPECT_EQ(v2_def(fixtures::whitehead()), 1);
  EXPECT_EQ(v2_def(fixtures::whitehead_figure_eight()), -1);
  EXPECT_EQ(v2(fixtures::whitehead()), 1);
  EXPECT_EQ(v2(fixtures::whitehead_figure_eight()), -1);
  EXPECT_EQ(v2_def(TangleWord::identity(2)), 0);
}

TEST(V2, LannesMatchesDefinition) {
  Rng rng(32);
  for (int k = 0; k < 40; ++k) {
    const TangleWord w = random_string_link(rng, {2, 2, 12, 3});
    EXPECT_EQ(v2(w), v2_def(w));
  }
}

TEST(Linking, Clasps) {
  EXPECT_EQ(linking(fixtures::clasp(1), 1, 2), 1);
  EXPECT_EQ(linking(fixtures::clasp(-1), 1, 2), -1);
  EXPECT_EQ(linking(fixtures::whitehead(), 1, 2), 0);
  EXPECT_EQ(linking_magnus(fixtures::clasp(1), 1, 2), 1);
}

TEST(Milnor, Borromean) {
  EXPECT_EQ(mu123(fixtures::borromean()), 1);
  EXPECT_EQ(mu123_def(fixtures::borromean()), 1);
  EXPECT_EQ(milnor_magnus(fixtures::borromean(), 1, 2, 3), 1);
  EXPECT_EQ(mu123_def(fixtures::fixture("borromean_inverse")), -1);
}

TEST(Milnor, StackAdds) {
  const TangleWord b = fixtures::borromean();
  EXPECT_EQ(mu123_def(stack(b, b)), 2);
  EXPECT_EQ(mu123(stack(b, b)), 2);
}

TEST(Milnor, MagnusMatchesDefinition) {
  Rng rng(33);
  for (int k = 0; k < 40; ++k) {
    const TangleWord w = random_string_link(rng, {3, 2, 12, 3});
    EXPECT_EQ(milnor_magnus(w, 1, 2, 3), mu123_def(w));
    EXPECT_EQ(milnor_lannes(w, 1, 2, 3), mu123_def(w));
  }
}

TEST(Symmetry, Borromean) {
  const SymmetryReport r = symmetry_check(fixtures::borromean());
  EXPECT_EQ(r.mu.at("123"), 1);
  EXPECT_EQ(r.mu.at("213"), -1);
  EXPECT_EQ(r.mu.at("132"), -1);
  EXPECT_EQ(r.mu.at("321"), -1);
  EXPECT_EQ(r.mu.at("231"), 1);
  EXPECT_EQ(r.mu.at("312"), 1);
  EXPECT_TRUE(r.all_hold());
}

TEST(Symmetry, RandomThreeStrings) {
  Rng rng(34);
  for (int k = 0; k < 20; ++k) {
    const TangleWord w = random_string_link(rng, {3, 2, 12, 3});
    EXPECT_TRUE(symmetry_check(w).all_hold());
  }
}

TEST(Singular, SkeinDifference) {
  const TangleWord w = fixtures::long_trefoil();
  const TangleWord d = make_double(w, 0);
  EXPECT_EQ(evaluate_singular(casson_def, d),
            casson_def(resolve_double(d, 0, 1)) - casson_def(resolve_double(d, 0, -1)));
}

TEST(Singular, OrderTwoVanishesOnThreeDoublePoints) {
  Rng rng(35);
  for (int k = 0; k < 10; ++k) {
    const TangleWord s = random_singular(rng, {2, 3, 10, 2}, 3);
    EXPECT_EQ(evaluate_singular(v2_def, s), 0);
  }
  EXPECT_NO_THROW(check_order_two(v2_def, 2));
}

TEST(Singular, NotOrderTwo) {
  const Evaluator cube = [](const TangleWord& w) {
    const std::int64_t l = linking(w, 1, 2);
    return l * l * l;
  };
  EXPECT_EQ(code_of([&] { check_order_two(cube, 2); }), ErrorCode::NotOrderTwo);
}

TEST(Expansion, MatchesOnRandomWords) {
  for (const char* name : {"V2_1_2", "mu_sq_1_2", "phi_2"}) {
    const Evaluator v = find_invariant(name, 2);
    const InitialData data = initial_data(v, 2);
    Rng rng(36);
    for (int k = 0; k < 20; ++k) {
      const TangleWord w = random_string_link(rng, {2, 2, 10, 3});
      EXPECT_EQ(murakami_expansion(data, w), v(w)) << name;
    }
  }
}

TEST(Expansion, InitialDataOfCasson) {
  const InitialData d = initial_data(casson_def, 1);
  EXPECT_EQ(d.constant, 0);
  EXPECT_EQ(d.at(ChordClass::parse("n1:(1.1-1.3)(1.2-1.4)")), 1);
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(find_invariant("V2_1_2", 2)(fixtures::whitehead()), 1);
  EXPECT_EQ(find_invariant("mu_1_2_3", 3)(fixtures::borromean()), 1);
  EXPECT_EQ(find_invariant("lannes:mu_1_2_3", 3)(fixtures::borromean()), 1);
  EXPECT_EQ(code_of([] { find_invariant("nope", 2); }), ErrorCode::UnknownName);
}

TEST(Catalog, LannesEntriesMatchDirectRoutes) {
  Rng rng(37);
  std::vector<TangleWord> words;
  for (int k = 0; k < 10; ++k) words.push_back(random_string_link(rng, {3, 2, 10, 3}));
  const auto cat = invariant_catalog(3);
  for (const NamedInvariant& a : cat) {
    if (a.name.rfind("lannes:", 0) != 0) continue;
    const std::string direct = a.name.substr(7);
    const auto it = std::find_if(cat.begin(), cat.end(), [&](const NamedInvariant& b) { return b.name == direct; });
    if (it == cat.end()) continue;
    for (const TangleWord& w : words) EXPECT_EQ(a.eval(w), it->eval(w)) << a.name;
  }
}
