#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int corpus = 200;
  int max_crossings = 16;
};

/// Seeded corpus of random string links on 1 to 4 strings (3-string links
/// are drawn twice as often).
std::vector<TangleWord> standard_corpus(std::uint64_t seed, int size, int max_crossings);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> notes;  // counts, and the first failing identity
};

/// Runs one acceptance criterion (1..9).
CriterionResult run_criterion(int id, const SuiteConfig& config);

/// Runs every criterion, calling `report` after each one.
std::vector<CriterionResult> run_suite(const SuiteConfig& config,
                                       const std::function<void(const CriterionResult&)>& report = {});

/// "criterion N: PASS  title" followed by indented notes.
std::string format(const CriterionResult& r);

}  // namespace strlink
