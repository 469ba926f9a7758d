#include "strlink/diagram_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace strlink {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

ParseResult parse_diagram(std::string_view text) {
  ParseResult result;
  auto error = [&](int line, std::string msg) {
    result.diagnostics.push_back({line, std::move(msg), ParseDiagnostic::Severity::Error});
  };

  TangleWord word;
  std::vector<int> event_lines;
  bool have_header = false;
  int header_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    if (!have_header) {
      if (tok[0] != "strands" || tok.size() < 2) {
        error(line_no, "expected header `strands N [closed] [singular]`");
        return result;
      }
      const auto n = to_int(tok[1]);
      if (!n || *n < 0) {
        error(line_no, "strand count must be a non-negative integer");
        return result;
      }
      word.strands = *n;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (tok[i] == "closed") word.closed = true;
        else if (tok[i] == "singular") word.singular = true;
        else error(line_no, "unknown header flag `" + std::string(tok[i]) + "`");
      }
      if (word.closed && word.strands != 0) error(line_no, "closed diagrams have 0 boundary strands");
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (tok.size() != 2) {
      error(line_no, "expected `<event> <position>`");
      continue;
    }
    TangleEvent e;
    if (tok[0] == "X+") e.kind = EventKind::CrossPos;
    else if (tok[0] == "X-") e.kind = EventKind::CrossNeg;
    else if (tok[0] == "XD") e.kind = EventKind::CrossDouble;
    else if (tok[0] == "U") e.kind = EventKind::Cup;
    else if (tok[0] == "A") e.kind = EventKind::Cap;
    else {
      error(line_no, "unknown event `" + std::string(tok[0]) + "`");
      continue;
    }
    const auto p = to_int(tok[1]);
    if (!p || *p < 1) {
      error(line_no, "positions are 1-based positive integers");
      continue;
    }
    e.position = *p;
    if (e.kind == EventKind::CrossDouble && !word.singular)
      error(line_no, "double point in a diagram not flagged singular");
    word.events.push_back(e);
    event_lines.push_back(line_no);
  }
  if (!have_header) {
    error(line_no, "missing header");
    return result;
  }
  if (!result.diagnostics.empty()) return result;

  // Level structure, reported against the offending line.
  int count = word.strands;
  for (std::size_t i = 0; i < word.events.size(); ++i) {
    const TangleEvent& e = word.events[i];
    const int p = e.position;
    const bool ok = e.kind == EventKind::Cup ? p <= count + 1 : p + 1 <= count;
    if (!ok) {
      error(event_lines[i], "position " + std::to_string(p) + " out of range for " +
                                std::to_string(count) + " active points");
      return result;
    }
    count += e.kind == EventKind::Cup ? 2 : e.kind == EventKind::Cap ? -2 : 0;
  }
  try {
    validate(word);
  } catch (const Error& err) {
    error(header_line, err.what());
    return result;
  }
  result.word = std::move(word);
  return result;
}

TangleWord parse_or_throw(std::string_view text) {
  ParseResult r = parse_diagram(text);
  if (r.ok()) return *r.word;
  const ParseDiagnostic& d = r.diagnostics.front();
  const bool semantic = d.message.find("NotAStringLink") != std::string::npos ||
                        d.message.find("MalformedWord") != std::string::npos ||
                        d.message.find("closed diagrams") != std::string::npos;
  throw Error(semantic ? ErrorCode::SemanticError : ErrorCode::SyntaxError,
              "line " + std::to_string(d.line) + ": " + d.message);
}

TangleWord load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_or_throw(ss.str());
}

std::string serialize(const TangleWord& word) {
  std::ostringstream os;
  os << "strands " << word.strands;
  if (word.closed) os << " closed";
  if (word.singular) os << " singular";
  os << "\n";
  for (const TangleEvent& e : word.events) {
    switch (e.kind) {
      case EventKind::CrossPos: os << "X+"; break;
      case EventKind::CrossNeg: os << "X-"; break;
      case EventKind::CrossDouble: os << "XD"; break;
      case EventKind::Cup: os << "U"; break;
      case EventKind::Cap: os << "A"; break;
    }
    os << " " << e.position << "\n";
  }
  return os.str();
}

std::string ReportRecord::key() const {
  std::string k = name;
  if (!indices.empty()) {
    k += "[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) k += ",";
      k += std::to_string(indices[i]);
    }
    k += "]";
  }
  return k;
}

std::string emit_report(std::vector<ReportRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const ReportRecord& a, const ReportRecord& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.indices < b.indices;
  });
  std::ostringstream os;
  for (const ReportRecord& r : records) os << r.key() << " = " << r.value << "\n";
  return os.str();
}

}  // namespace strlink
