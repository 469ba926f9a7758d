#include "strlink/acceptance.hpp"

#include <sstream>

#include "strlink/clasper.hpp"
#include "strlink/conway.hpp"
#include "strlink/diagram_io.hpp"
#include "strlink/fixtures.hpp"
#include "strlink/milnor.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "strlink/weights.hpp"

namespace strlink {

namespace {

// Tallies checks and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string what) : what_(std::move(what)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = describe();
  }
  bool ok() const { return failed_ == 0; }
  void note(CriterionResult& r) const {
    r.notes.push_back(what_ + ": " + std::to_string(total_ - failed_) + "/" + std::to_string(total_));
    if (!first_.empty()) r.notes.push_back("  first failure: " + first_);
    if (failed_) r.pass = false;
  }

 private:
  std::string what_;
  int total_ = 0;
  int failed_ = 0;
  std::string first_;
};

std::string eq(const std::string& lhs, std::int64_t a, std::int64_t b) {
  return lhs + " = " + std::to_string(a) + ", expected " + std::to_string(b);
}

std::string at(int k, const std::string& s) { return "corpus[" + std::to_string(k) + "] " + s; }

ConwayPoly times_z(const ConwayPoly& p) {
  ConwayPoly r;
  r.coeffs.assign(1, 0);
  r.coeffs.insert(r.coeffs.end(), p.coeffs.begin(), p.coeffs.end());
  return r;
}

ConwayPoly minus(const ConwayPoly& a, const ConwayPoly& b) {
  ConwayPoly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
  return r;
}

// Criterion 1 ------------------------------------------------------------------

CriterionResult point_values() {
  CriterionResult r{1, "reference point values", true, {}};
  Tally t("point values");
  const TangleWord tref = fixtures::long_trefoil();
  t.check(casson_long(tref) == 1, [&] { return eq("Lannes phi(trefoil)", casson_long(tref), 1); });
  t.check(casson_def(tref) == 1, [&] { return eq("Conway phi(trefoil)", casson_def(tref), 1); });
  const TangleWord W = fixtures::whitehead(), w = fixtures::whitehead_figure_eight();
  t.check(v2(W) == 1, [&] { return eq("Lannes V2(W)", v2(W), 1); });
  t.check(v2_def(W) == 1, [&] { return eq("plat V2(W)", v2_def(W), 1); });
  t.check(v2(w) == -1, [&] { return eq("Lannes V2(w)", v2(w), -1); });
  t.check(v2_def(w) == -1, [&] { return eq("plat V2(w)", v2_def(w), -1); });
  const TangleWord b = fixtures::borromean();
  t.check(mu123(b) == 1, [&] { return eq("Lannes mu123(Borromean)", mu123(b), 1); });
  t.check(mu123_def(b) == 1, [&] { return eq("V- route mu123(Borromean)", mu123_def(b), 1); });
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const TangleWord s = psi1_rep({i, j}, n);
        for (int a = 1; a <= n; ++a)
          for (int c = a + 1; c <= n; ++c) {
            const std::int64_t want = (a == i && c == j) ? -1 : 0;
            t.check(linking(s, a, c) == want, [&] {
              return eq("mu" + std::to_string(a) + std::to_string(c) + " of strut " + std::to_string(i) +
                            std::to_string(j) + " on " + std::to_string(n),
                        linking(s, a, c), want);
            });
          }
      }
  t.note(r);

  // Initial data of V-, in reference order.
  Tally d("V- initial data");
  const InitialData data = initial_data([](const TangleWord& s) { return v_pm(s, -1); }, 3);
  const auto cls = [](const char* key) { return ChordClass::parse(key); };
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> got;
  got.push_back({"1_3", {data.constant}});
  got.push_back({"ud_i", {data.self.at(1), data.self.at(2), data.self.at(3)}});
  got.push_back({"SING_ij", {data.single.at({1, 2}), data.single.at({1, 3}), data.single.at({2, 3})}});
  got.push_back({"DDA_ij",
                 {data.at(cls("n3:(1.1-2.1)(1.2-2.2)")), data.at(cls("n3:(1.1-3.1)(1.2-3.2)")),
                  data.at(cls("n3:(2.1-3.1)(2.2-3.2)"))}});
  got.push_back({"DDC_12", {data.at(cls("n3:(1.1-1.3)(1.2-2.1)"))}});
  got.push_back({"DDC_23", {data.at(cls("n3:(2.1-2.3)(2.2-3.1)"))}});
  got.push_back({"DDC_13", {data.at(cls("n3:(1.1-1.3)(1.2-3.1)"))}});
  got.push_back({"TDB", {data.at(cls("n3:(1.1-3.2)(2.1-3.1)"))}});
  got.push_back({"TDF", {data.at(cls("n3:(1.1-3.1)(1.2-2.1)"))}});
  got.push_back({"TDC", {data.at(cls("n3:(1.1-2.2)(2.1-3.1)"))}});
  got.push_back({"TDD", {data.at(cls("n3:(1.1-2.1)(2.2-3.1)"))}});
  const std::int64_t expected[] = {0, 0, 0, 0, -1, -1, 1, 0, 0, 0, 1};
  std::ostringstream line;
  for (std::size_t k = 0; k < got.size(); ++k) {
    line << (k ? " " : "") << got[k].first << "=";
    for (std::size_t m = 0; m < got[k].second.size(); ++m) line << (m ? "," : "") << got[k].second[m];
    for (std::int64_t v : got[k].second)
      d.check(v == expected[k], [&] { return eq("V-(" + got[k].first + ")", v, expected[k]); });
  }
  d.note(r);
  r.notes.push_back("  computed: " + line.str());
  return r;
}

// Criterion 2 ------------------------------------------------------------------

CriterionResult oracle_equivalence(const std::vector<TangleWord>& corpus) {
  CriterionResult r{2, "oracle equivalence on the corpus", true, {}};
  Tally phi("Lannes phi = z^2 of the closure (skein), per string");
  Tally v2t("Lannes V2 = plat-closure V2, per pair");
  Tally mut("Lannes mu_ijk = V- route, per triple");
  Tally mag("Lannes mu_ijk = Magnus longitudes, per triple");
  int ref_agree = 0, ref_total = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const TangleWord& s = corpus[k];
    const int n = s.strands;
    for (int i = 1; i <= n; ++i) {
      const int keep[] = {i};
      const TangleWord one = sublink(s, keep);
      const std::int64_t a = casson_long(one), b = conway(close(one)).coefficient(2);
      phi.check(a == b, [&] { return at(static_cast<int>(k), eq("phi" + std::to_string(i), a, b)); });
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int keep[] = {i, j};
        const TangleWord two = sublink(s, keep);
        const std::int64_t a = v2(two), b = v2_def(two);
        v2t.check(a == b, [&] { return at(static_cast<int>(k), eq("V2_" + std::to_string(i) + std::to_string(j), a, b)); });
      }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          const int keep[] = {i, j, l};
          const TangleWord three = sublink(s, keep);
          const std::int64_t a = mu123(three), b = mu123_def(three), c = milnor_magnus(s, i, j, l);
          const std::string name = "mu" + std::to_string(i) + std::to_string(j) + std::to_string(l);
          mut.check(a == b, [&] { return at(static_cast<int>(k), eq(name, a, b)); });
          mag.check(a == c, [&] { return at(static_cast<int>(k), eq(name, a, c)); });
          ++ref_total;
          if (b - v2_pair(three, 1, 3) == a) ++ref_agree;
        }
  }
  phi.note(r);
  v2t.note(r);
  mut.note(r);
  mag.note(r);
  r.notes.push_back("V- formula with the reference -V2(s13) term agrees on " + std::to_string(ref_agree) + "/" +
                    std::to_string(ref_total) + " triples");
  return r;
}

// Criterion 3 ------------------------------------------------------------------

CriterionResult expansion(const std::vector<TangleWord>& corpus) {
  CriterionResult r{3, "universal order-two expansion", true, {}};
  for (int n : {3, 4}) {
    std::vector<std::string> names = {"mu_prod_1_2_1_3", "plat_phi_1_2"};
    if (n == 3) names.insert(names.begin(), "V-");
    else names.push_back("plat_phi_1_4");
    for (const std::string& name : names) {
      Tally t(name + " on " + std::to_string(n) + "-string corpus words");
      const Evaluator v = find_invariant(name, n);
      check_order_two(v, n);
      const InitialData data = initial_data(v, n);
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        if (corpus[k].strands != n) continue;
        const std::int64_t a = murakami_expansion(data, corpus[k]), b = v(corpus[k]);
        t.check(a == b, [&] { return at(static_cast<int>(k), eq("expansion of " + name, a, b)); });
      }
      t.note(r);
    }
  }
  return r;
}

// Criterion 4 ------------------------------------------------------------------

CriterionResult symmetries(const std::vector<TangleWord>& corpus) {
  CriterionResult r{4, "symmetry identities and the V-/V+ relation", true, {}};
  Tally sym("five index-exchange and cyclic identities, per diagram");
  Tally pm("V- = V+ - mu12 (reference form)");
  Tally fixed("V- = V+ + mu12");
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const TangleWord& s = corpus[k];
    if (s.strands != 3) continue;
    const SymmetryReport rep = symmetry_check(s);
    sym.check(rep.all_hold(), [&] {
      for (const auto& [name, ok] : rep.identities)
        if (!ok) return at(static_cast<int>(k), name);
      return std::string();
    });
    const std::int64_t vm = v_pm(s, -1), vp = v_pm(s, 1), m = linking(s, 1, 2);
    pm.check(vm == vp - m, [&] { return at(static_cast<int>(k), eq("V-", vm, vp - m)); });
    fixed.check(vm == vp + m, [&] { return at(static_cast<int>(k), eq("V-", vm, vp + m)); });
  }
  sym.note(r);
  pm.note(r);
  const bool pass = r.pass;
  fixed.note(r);
  r.notes.back() += fixed.ok() ? " (corrected sign, reported only)" : "";
  r.pass = pass;
  return r;
}

// Criterion 5 ------------------------------------------------------------------

CriterionResult finite_type(const SuiteConfig& config, const std::vector<TangleWord>& corpus) {
  CriterionResult r{5, "finite type: three double points, skein relation", true, {}};
  Tally van("catalog invariants vanishing on words with three double points");
  Rng rng(config.seed * 7919 + 5);
  for (int k = 0; k < 50; ++k) {
    GeneratorOptions o;
    o.strands = 1 + k % 4;
    o.min_crossings = 3;
    o.max_crossings = std::min(config.max_crossings, 10);
    o.max_extra_points = 2;
    const TangleWord w = random_singular(rng, o, 3);
    for (const NamedInvariant& v : invariant_catalog(o.strands)) {
      const std::int64_t x = evaluate_singular(v.eval, w);
      van.check(x == 0, [&] { return "singular[" + std::to_string(k) + "] " + eq(v.name, x, 0); });
    }
  }
  van.note(r);

  Tally sk("v(double) = eps (v(s) - v(switched)), per crossing and invariant");
  Tally cw("Conway skein on the closure, per crossing");
  for (std::size_t k = 0; k < corpus.size() && k < 50; ++k) {
    const TangleWord& s = corpus[k];
    const auto cat = invariant_catalog(s.strands);
    const StrandTrace st = validate(s);
    for (int x = 0; x < s.crossing_count(); ++x) {
      const int eps = st.crossings[static_cast<std::size_t>(x)].sign;
      const TangleWord sw = switch_crossing(s, x), dbl = make_double(s, x);
      for (const NamedInvariant& v : cat) {
        const std::int64_t a = evaluate_singular(v.eval, dbl), b = eps * (v.eval(s) - v.eval(sw));
        sk.check(a == b, [&] { return at(static_cast<int>(k), "crossing " + std::to_string(x) + " " + eq(v.name, a, b)); });
      }
    }
    const GaussCode g = gauss_code(close(s));
    const ConwayPoly base = conway(g);
    for (std::size_t x = 0; x < g.sign.size(); ++x) {
      const int id = static_cast<int>(x);
      const ConwayPoly lhs = minus(base, conway(switch_code(g, id)));
      ConwayPoly rhs = times_z(conway(smooth_code(g, id)));
      if (g.sign[x] < 0) rhs = minus(ConwayPoly{}, rhs);
      cw.check(lhs == rhs, [&] { return at(static_cast<int>(k), "closure crossing " + std::to_string(x)); });
    }
  }
  sk.note(r);
  cw.note(r);
  return r;
}

// Criterion 6 ------------------------------------------------------------------

CriterionResult isotopy(const SuiteConfig& config, const std::vector<TangleWord>& corpus) {
  CriterionResult r{6, "isotopy invariance under 100 random moves", true, {}};
  Tally t("catalog invariants equal before and after, per diagram and invariant");
  Tally cw("Conway polynomial of the closure equal before and after");
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const TangleWord& s = corpus[k];
    const TangleWord m = mutate(s, config.seed * 100003 + k, 100);
    for (const NamedInvariant& v : invariant_catalog(s.strands)) {
      const std::int64_t a = v.eval(m), b = v.eval(s);
      t.check(a == b, [&] { return at(static_cast<int>(k), eq(v.name + " after moves", a, b)); });
    }
    const TangleWord cs = close(s), cm = close(m);
    if (s.strands == 1) {
      cw.check(knot_conway(cs) == knot_conway(cm), [&] { return at(static_cast<int>(k), "closure"); });
    } else if (cm.crossing_count() <= kDefaultCrossingBudget) {
      cw.check(conway(cs) == conway(cm), [&] { return at(static_cast<int>(k), "closure"); });
    }
  }
  t.note(r);
  cw.note(r);
  return r;
}

// Criterion 7 ------------------------------------------------------------------

CriterionResult weight_validity() {
  CriterionResult r{7, "weight systems satisfy 1T and 4T; rank 4 for two strings", true, {}};
  Tally t("built-in tables passing 1T/4T");
  for (const std::string& name : builtin_names(4)) {
    WeightSystem w;
    std::string why;
    try {
      w = builtin(name);
    } catch (const Error& e) {
      why = e.what();
    }
    if (why.empty()) {
      const auto v = check_weight(w);
      if (!v.empty()) why = v.front();
    }
    t.check(why.empty(), [&] { return name + ": " + why; });
  }
  t.note(r);
  Tally rk("admissible order-two classes modulo 4T for two strings");
  const std::size_t rank = four_term_quotient_rank(2);
  rk.check(rank == 4, [&] { return eq("rank", static_cast<std::int64_t>(rank), 4); });
  rk.note(r);
  return r;
}

// Criterion 8 ------------------------------------------------------------------

CriterionResult classification() {
  CriterionResult r{8, "clasper classification", true, {}};
  Tally comm("invariant vector of psi2 representative = eta, per diagram");
  Tally ranks("ranks of A2(n) for n = 2, 3, 4");
  Tally struts("mu2 of psi1 representative = strut");
  Tally white("invariant vectors of w_ij and w_ji agree");
  const std::size_t expect[] = {0, 0, 3, 7, 14};
  for (int n = 2; n <= 4; ++n) {
    for (const YDiagram& y : all_ydiagrams(n)) {
      const ClassVector v = invariant_vector(psi2_rep(y, n)), e = eta(y, n);
      comm.check(v == e, [&] { return y.str() + " on " + std::to_string(n) + ": got " + format(v); });
    }
    const std::size_t rk = a2_rank(n), basis = a2_basis(n).size(), dim = ClassVector::dimension(n);
    ranks.check(rk == expect[n] && basis == expect[n] && dim == expect[n], [&] {
      return "n=" + std::to_string(n) + ": rank " + std::to_string(rk) + ", basis " + std::to_string(basis);
    });
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const A1Element got = mu2_vector(psi1_rep({i, j}, n)), want = a1_normalize({{{i, j}, 1}}, n);
        struts.check(got == want, [&] { return "I" + std::to_string(i) + std::to_string(j) + ": " + format(got); });
      }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const TangleWord a = psi2_rep(YDiagram::pair(i, 1, 2, j), n), b = psi2_rep(YDiagram::pair(j, 1, 2, i), n);
        white.check(a != b && invariant_vector(a) == invariant_vector(b),
                    [&] { return "strings " + std::to_string(i) + "," + std::to_string(j); });
      }
  }
  comm.note(r);
  ranks.note(r);
  struts.note(r);
  white.note(r);
  return r;
}

// Criterion 9 ------------------------------------------------------------------

CriterionResult calibration_stability(const SuiteConfig& config) {
  CriterionResult r{9, "calibration stability on disjoint corpora", true, {}};
  struct Target {
    std::string name;
    int n;
    Evaluator oracle;
  };
  const std::vector<Target> targets = {
      {"V2_1_2", 2, [](const TangleWord& w) { return v2_def(w); }},
      {"mu_1_2_3", 3, [](const TangleWord& w) { return mu123_def(w); }},
  };
  for (const Target& target : targets) {
    Tally t(target.name + " on two 100-diagram corpora");
    std::vector<std::vector<CalibrationSample>> sets(2);
    std::set<std::string> seen;
    for (int c = 0; c < 2; ++c) {
      Rng rng(config.seed * 2 + static_cast<std::uint64_t>(c) + 1000);
      while (sets[c].size() < 100) {
        const TangleWord w = random_string_link(rng, {target.n, 2, config.max_crossings, 3});
        const std::string text = serialize(w);
        if (c == 0) seen.insert(text);
        else if (seen.count(text)) continue;
        sets[c].push_back({w, target.oracle(w)});
      }
    }
    std::vector<WeightSystem> found;
    std::string err;
    for (const auto& s : sets) {
      try {
        found.push_back(calibrate(target.n, s, {0, 1}, target.name));
      } catch (const Error& e) {
        err = e.what();
      }
    }
    t.check(found.size() == 2, [&] { return err; });
    if (found.size() == 2) {
      t.check(found[0].values == found[1].values && found[0].delta_v == found[1].delta_v,
              [&] { return "corpora disagree:\n" + serialize_weights(found[0]) + serialize_weights(found[1]); });
      const WeightSystem b = builtin(target.name);
      t.check(found[0].values == b.values && found[0].delta_v == b.delta_v,
              [&] { return "calibration differs from the built-in table"; });
      r.notes.push_back(target.name + ": delta_v = " + std::to_string(found[0].delta_v) + ", " +
                        std::to_string(found[0].values.size()) + " nonzero weights");
    }
    t.note(r);
  }
  return r;
}

}  // namespace

std::vector<TangleWord> standard_corpus(std::uint64_t seed, int size, int max_crossings) {
  static constexpr int kStrands[] = {1, 2, 3, 4, 3};
  Rng rng(seed);
  std::vector<TangleWord> out;
  for (int k = 0; k < size; ++k) {
    GeneratorOptions o;
    o.strands = kStrands[k % 5];
    o.min_crossings = 2;
    o.max_crossings = max_crossings;
    o.max_extra_points = 3;
    out.push_back(random_string_link(rng, o));
  }
  return out;
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  const auto corpus = [&] { return standard_corpus(config.seed, config.corpus, config.max_crossings); };
  switch (id) {
    case 1: return point_values();
    case 2: return oracle_equivalence(corpus());
    case 3: return expansion(corpus());
    case 4: return symmetries(corpus());
    case 5: return finite_type(config, corpus());
    case 6: return isotopy(config, corpus());
    case 7: return weight_validity();
    case 8: return classification();
    case 9: return calibration_stability(config);
    default: throw Error(ErrorCode::UnknownName, "no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config,
                                       const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) {
    CriterionResult r;
    try {
      r = run_criterion(id, config);
    } catch (const Error& e) {
      r = {id, "criterion " + std::to_string(id), false, {std::string("error: ") + e.what()}};
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
  for (const std::string& n : r.notes) os << "    " << n << "\n";
  return os.str();
}

}  // namespace strlink
