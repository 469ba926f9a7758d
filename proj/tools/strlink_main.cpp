#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "strlink/acceptance.hpp"
#include "strlink/clasper.hpp"
#include "strlink/conway.hpp"
#include "strlink/diagram_io.hpp"
#include "strlink/moves.hpp"
#include "strlink/vassiliev.hpp"
#include "strlink/weights.hpp"

using namespace strlink;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string oracle_kind;
  std::string invariant;
  int strands = 0;
  std::uint64_t seed = 7;
  int corpus = 200;
  int max_crossings = kDefaultCrossingBudget;
  std::string out;
};

std::vector<ReportRecord> records_of(const std::vector<InvariantValue>& v) {
  std::vector<ReportRecord> out;
  for (const InvariantValue& x : v) out.push_back({x.name, x.indices, x.value});
  return out;
}

TangleWord closed_input(const std::string& path) {
  const TangleWord w = load_diagram(path);
  return w.closed ? w : close(w);
}

int invariants(const RunConfig& c, std::ostream& os) {
  os << emit_report(records_of(all_invariants(load_diagram(c.inputs.at(0)))));
  return 0;
}

int oracle(const RunConfig& c, std::ostream& os) {
  const TangleWord w = closed_input(c.inputs.at(0));
  if (c.oracle_kind == "casson") {
    os << emit_report({{"casson", {}, casson_knot(w, c.max_crossings)}});
    return 0;
  }
  const ConwayPoly p = conway(w, c.max_crossings);
  std::vector<ReportRecord> r;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) r.push_back({"conway", {static_cast<int>(k)}, p.coeffs[k]});
  os << emit_report(r);
  return 0;
}

int expand(const RunConfig& c, std::ostream& os) {
  const TangleWord w = load_diagram(c.inputs.at(0));
  const Evaluator v = find_invariant(c.invariant, w.strands);
  check_order_two(v, w.strands);
  const InitialData data = initial_data(v, w.strands);
  const std::int64_t lhs = v(w), rhs = murakami_expansion(data, w);
  os << emit_report({{"const", {}, data.constant}, {"direct", {}, lhs}, {"expansion", {}, rhs}});
  if (lhs != rhs) {
    std::cerr << "expansion of " << c.invariant << " differs: " << rhs << " != " << lhs << "\n";
    return 1;
  }
  return 0;
}

int symmetry(const RunConfig& c, std::ostream& os) {
  const SymmetryReport r = symmetry_check(load_diagram(c.inputs.at(0)));
  std::vector<ReportRecord> rec;
  for (const auto& [k, v] : r.mu) rec.push_back({"mu", {k[0] - '0', k[1] - '0', k[2] - '0'}, v});
  rec.push_back({"mu", {1, 2}, r.mu12});
  rec.push_back({"mu", {1, 3}, r.mu13});
  rec.push_back({"mu", {2, 3}, r.mu23});
  os << emit_report(rec);
  int status = 0;
  for (const auto& [name, ok] : r.identities) {
    os << (ok ? "holds: " : "FAILS: ") << name << "\n";
    if (!ok) status = 1;
  }
  return status;
}

int classify(const RunConfig& c, std::ostream& os) {
  const TangleWord w = load_diagram(c.inputs.at(0));
  const A1Element m = mu2_vector(w);
  os << "# mu2\n" << format(m);
  if (m.empty()) os << "# class vector\n" << format(invariant_vector(w));
  else os << "# not in SL2: class vector not defined\n";
  return 0;
}

int c3_equiv(const RunConfig& c, std::ostream& os) {
  const bool same = c3_equivalent(load_diagram(c.inputs.at(0)), load_diagram(c.inputs.at(1)));
  os << "c3_equivalent = " << (same ? "true" : "false") << "\n";
  return 0;
}

int calibrate_cmd(const RunConfig& c, std::ostream& os) {
  int n = c.strands;
  if (n == 0) {
    for (char ch : c.invariant)
      if (ch >= '1' && ch <= '9') n = std::max(n, ch - '0');
    n = std::max(n, 1);
  }
  const Evaluator oracle = find_invariant(c.invariant, n);
  Rng rng(c.seed);
  std::vector<CalibrationSample> samples;
  for (int k = 0; k < c.corpus; ++k) {
    const TangleWord w = random_string_link(rng, {n, 2, c.max_crossings, 3});
    samples.push_back({w, oracle(w)});
  }
  os << serialize_weights(calibrate(n, samples, {0, 1}, c.invariant));
  return 0;
}

int verify(const RunConfig& c, std::ostream& os) {
  const SuiteConfig s{c.seed, c.corpus, c.max_crossings};
  int status = 0;
  run_suite(s, [&](const CriterionResult& r) {
    os << format(r) << std::flush;
    if (!r.pass) status = 1;
  });
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-two invariants of string links"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "corpus seed");
  app.add_option("--corpus", cfg.corpus, "corpus size");
  app.add_option("--max-crossings", cfg.max_crossings, "crossing budget")->check(CLI::Range(1, kDefaultCrossingBudget));
  app.add_option("--out", cfg.out, "write the report to this file");

  std::function<int(const RunConfig&, std::ostream&)> action;
  const auto sub = [&](const char* name, const char* help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  sub("invariants", "all applicable invariants of a diagram", invariants)
      ->add_option("file", cfg.inputs)->required()->expected(1);
  {
    CLI::App* s = sub("oracle", "Conway polynomial or Casson invariant of a closed diagram", oracle);
    s->add_option("kind", cfg.oracle_kind)->required()->check(CLI::IsMember({"conway", "casson"}));
    s->add_option("file", cfg.inputs)->required()->expected(1);
  }
  {
    CLI::App* s = sub("expand", "compare an invariant with its universal expansion", expand);
    s->add_option("file", cfg.inputs)->required()->expected(1);
    s->add_option("--invariant", cfg.invariant, "catalog name, e.g. V- or mu_prod_1_2_1_3")->required();
  }
  sub("symmetry", "triple linking numbers and their identities", symmetry)
      ->add_option("file", cfg.inputs)->required()->expected(1);
  sub("classify", "mu2 vector, and the class vector in SL2", classify)
      ->add_option("file", cfg.inputs)->required()->expected(1);
  sub("c3-equiv", "decide C3-equivalence of two string links in SL2", c3_equiv)
      ->add_option("files", cfg.inputs)->required()->expected(2);
  {
    CLI::App* s = sub("calibrate", "solve for the weight system of a catalog invariant", calibrate_cmd);
    s->add_option("--invariant", cfg.invariant, "catalog name, e.g. V2_1_2")->required();
    s->add_option("--strands", cfg.strands, "strings of the corpus (default: largest index)");
  }
  sub("verify", "run the acceptance suite", verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::ostringstream report;
    const int status = action(cfg, report);
    std::cout << report.str();
    if (!cfg.out.empty()) {
      std::ofstream f(cfg.out);
      if (!f) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return 2;
      }
      f << report.str();
    }
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
