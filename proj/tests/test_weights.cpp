#include <gtest/gtest.h>

#include "strlink/fixtures.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "strlink/weights.hpp"
#include "test_support.hpp"

using namespace strlink;
using strlink::test::code_of;

namespace {

std::vector<CalibrationSample> samples(int n, const Evaluator& v, std::uint64_t seed, int size) {
  Rng rng(seed);
  std::vector<CalibrationSample> out;
  for (int k = 0; k < size; ++k) {
    const TangleWord w = random_string_link(rng, {n, 2, 12, 3});
    out.push_back({w, v(w)});
  }
  return out;
}

}  // namespace

TEST(Builtins, AllValid) {
  for (const std::string& name : builtin_names(4)) {
    const WeightSystem w = builtin(name);
    EXPECT_TRUE(w.validated) << name;
    EXPECT_TRUE(check_weight(w).empty()) << name;
  }
}

TEST(Builtins, UnknownName) {
  EXPECT_EQ(code_of([] { builtin("V3_1_2"); }), ErrorCode::UnknownName);
  EXPECT_EQ(code_of([] { builtin("mu_1_1_2"); }), ErrorCode::UnknownName);
}

TEST(Builtins, CassonOnKnots) {
  const WeightSystem c = builtin("casson_1");
  EXPECT_EQ(lannes_eval(c, fixtures::long_trefoil()), 1);
  EXPECT_EQ(lannes_eval(c, fixtures::long_figure_eight()), -1);
  EXPECT_EQ(lannes_eval(c, TangleWord::identity(1)), 0);
}

TEST(Builtins, SupportSelectsSublink) {
  const int at[] = {1, 3};
  const TangleWord e = fixtures::embed(fixtures::whitehead(), 3, at);
  EXPECT_EQ(lannes_eval(builtin("V2_1_3"), e), 1);
  EXPECT_EQ(lannes_eval(builtin("V2_1_2"), e), 0);
  EXPECT_EQ(lannes_eval(builtin("V2_2_3"), e), 0);
}

TEST(Validity, OneTermViolation) {
  WeightSystem w = builtin("casson_1");
  w.values[ChordClass::parse("n1:(1.1-1.2)(1.3-1.4)")] = 1;
  EXPECT_FALSE(check_weight(w).empty());
  EXPECT_EQ(code_of([&] { validated(w); }), ErrorCode::UnvalidatedWeight);
}

TEST(Validity, FourTermViolation) {
  WeightSystem w = builtin("V2_1_2");
  w.values[ChordClass::parse("n2:(1.1-2.1)(1.2-2.2)")] += 1;
  EXPECT_FALSE(check_weight(w).empty());
}

TEST(Validity, QuotientRanks) {
  EXPECT_EQ(four_term_quotient_rank(1), 1u);
  EXPECT_EQ(four_term_quotient_rank(2), 4u);
}

TEST(Calibrate, CassonFromKnots) {
  const auto s = samples(1, casson_def, 3, 60);
  const WeightSystem w = calibrate(1, s, {0, 1});
  EXPECT_EQ(w.at(ChordClass::parse("n1:(1.1-1.3)(1.2-1.4)")), 1);
}

TEST(Calibrate, V2RecoversBuiltin) {
  const auto s = samples(2, v2_def, 11, 200);
  const WeightSystem w = calibrate(2, s, {0, 1}, "V2");
  const WeightSystem ref = builtin("W22");
  for (const ChordClass& c : enumerate_classes(2, 2)) {
    if (!c.admissible()) continue;
    EXPECT_EQ(w.at(c), ref.at(c)) << c.key();
  }
  for (const CalibrationSample& x : samples(2, v2_def, 12, 40)) EXPECT_EQ(lannes_eval(w, x.word), x.value);
}

TEST(Calibrate, TrivialCorpusUnderdetermined) {
  std::vector<CalibrationSample> s(5, {TangleWord::identity(2), 0});
  EXPECT_EQ(code_of([&] { calibrate(2, s, {0, 1}); }), ErrorCode::Underdetermined);
}

TEST(Calibrate, InconsistentValues) {
  std::vector<CalibrationSample> s = {{TangleWord::identity(1), 1}};
  EXPECT_EQ(code_of([&] { calibrate(1, s, {0, 1}); }), ErrorCode::Inconsistent);
}

TEST(Serialize, WeightsRoundTrip) {
  for (const std::string& name : {"casson_1", "V2_1_2", "mu_1_2_3", "mu_1_3_2_4"}) {
    const WeightSystem w = builtin(name);
    const WeightSystem r = parse_weights(serialize_weights(w));
    EXPECT_EQ(r.values, w.values) << name;
    EXPECT_EQ(r.delta_v, w.delta_v) << name;
    EXPECT_EQ(r.support, w.support) << name;
  }
}

TEST(Pairing, LinkingNumber) {
  const ArrowDiagramPattern p{2, {{{1, 1}, {2, 1}, 0}}, 1};
  EXPECT_EQ(gauss_pairing(std::span(&p, 1), fixtures::clasp(1)), 1);
  EXPECT_EQ(gauss_pairing(std::span(&p, 1), fixtures::clasp(-1)), -1);
}

TEST(Pairing, SearchReproducesCasson) {
  const auto fit = search_pairing(1, samples(1, casson_def, 5, 40));
  EXPECT_FALSE(fit.empty());
  for (const CalibrationSample& x : samples(1, casson_def, 6, 30)) EXPECT_EQ(gauss_pairing(fit, x.word), x.value);
}

TEST(Pairing, SearchReproducesV2) {
  const auto fit = search_pairing(2, samples(2, v2_def, 7, 120));
  for (const CalibrationSample& x : samples(2, v2_def, 8, 30)) EXPECT_EQ(gauss_pairing(fit, x.word), x.value);
}

TEST(Pairing, InconsistentSearch) {
  std::vector<CalibrationSample> s = {{TangleWord::identity(1), 3}};
  EXPECT_EQ(code_of([&] { search_pairing(1, s); }), ErrorCode::Inconsistent);
}
