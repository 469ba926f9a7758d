#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  int line = 0;
  std::string message;
  Severity severity = Severity::Error;
};

struct ParseResult {
  std::optional<TangleWord> word;
  std::vector<ParseDiagnostic> diagnostics;
  bool ok() const { return word.has_value(); }
};

/// Parses the tangle-word text format:
///   strands N [closed] [singular]
///   X+ p | X- p | XD p | U p | A p
/// with `#` starting a comment. Open words must be valid string links.
ParseResult parse_diagram(std::string_view text);

/// As parse_diagram, throwing SyntaxError / SemanticError with the first
/// diagnostic's line on failure.
TangleWord parse_or_throw(std::string_view text);
TangleWord load_diagram(const std::string& path);

std::string serialize(const TangleWord& word);

struct ReportRecord {
  std::string name;
  std::vector<int> indices;  // 1-based; empty for scalar records such as `const`
  std::int64_t value = 0;

  std::string key() const;
};

/// One `key = value` line per record, sorted by (name, indices).
std::string emit_report(std::vector<ReportRecord> records);

}  // namespace strlink
