// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes. With --known-failures the
// status is 0 when exactly the listed criteria fail.

#include <chrono>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "strlink/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"strlink acceptance suite"};
  strlink::SuiteConfig cfg;
  std::vector<int> known;
  std::vector<int> only;
  app.add_option("--seed", cfg.seed);
  app.add_option("--corpus", cfg.corpus);
  app.add_option("--max-crossings", cfg.max_crossings);
  app.add_option("--known-failures", known, "criteria expected to fail")->delimiter(',');
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::set<int> expected(known.begin(), known.end());
  const auto start = std::chrono::steady_clock::now();
  int unexpected = 0;
  for (int id = 1; id <= 9; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    strlink::CriterionResult r;
    try {
      r = strlink::run_criterion(id, cfg);
    } catch (const strlink::Error& e) {
      r = {id, "criterion " + std::to_string(id), false, {std::string("error: ") + e.what()}};
    }
    std::cout << strlink::format(r) << std::flush;
    if (r.pass == expected.count(id) > 0) {
      ++unexpected;
      if (r.pass) std::cout << "    listed as a known failure but passes\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "seed " << cfg.seed << ", corpus " << cfg.corpus << ", max crossings " << cfg.max_crossings << ", "
            << secs << " s\n";
  return unexpected == 0 ? 0 : 1;
}
