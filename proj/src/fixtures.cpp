#include "strlink/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "strlink/diagram_io.hpp"

namespace strlink::fixtures {

namespace {

const std::map<std::string, std::string>& texts() {
  static const std::map<std::string, std::string> t = {
      {"trefoil", "strands 1\nU 1\nX- 2\nX- 2\nX- 2\nA 1\n"},
      {"figure_eight", "strands 1\nU 1\nU 3\nX- 4\nX- 2\nA 3\nX+ 2\nU 4\nX+ 2\nA 1\nA 1\n"},
      {"whitehead", "strands 2\nU 2\nX- 3\nX+ 1\nX+ 2\nX- 3\nX- 3\nA 1\n"},
      {"whitehead_figure_eight", "strands 2\nU 3\nX+ 2\nX- 1\nX+ 2\nX+ 2\nA 3\nX- 1\n"},
      {"borromean", "strands 3\nX+ 2\nX- 1\nX+ 2\nX- 1\nX+ 2\nX- 1\n"},
      {"borromean_inverse", "strands 3\nX+ 1\nX- 2\nX+ 1\nX- 2\nX+ 1\nX- 2\n"},
      {"clasp_positive", "strands 2\nX+ 1\nX+ 1\n"},
      {"clasp_negative", "strands 2\nX- 1\nX- 1\n"},
  };
  return t;
}

}  // namespace

TangleWord fixture(const std::string& name) {
  const auto it = texts().find(name);
  if (it == texts().end()) throw Error(ErrorCode::UnknownName, "no fixture named " + name);
  if (const char* dir = std::getenv("STRLINK_FIXTURE_DIR")) {
    const std::filesystem::path p = std::filesystem::path(dir) / (name + ".tw");
    if (std::filesystem::exists(p)) return load_diagram(p.string());
  }
  return parse_or_throw(it->second);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : texts()) out.push_back(k);
  return out;
}

TangleWord long_trefoil() { return fixture("trefoil"); }
TangleWord long_figure_eight() { return fixture("figure_eight"); }
TangleWord whitehead() { return fixture("whitehead"); }
TangleWord whitehead_figure_eight() { return fixture("whitehead_figure_eight"); }
TangleWord borromean() { return fixture("borromean"); }
TangleWord clasp(int sign) { return fixture(sign > 0 ? "clasp_positive" : "clasp_negative"); }

TangleWord embed(const TangleWord& tau, int n, std::span<const int> strings) {
  if (tau.closed || static_cast<std::size_t>(tau.strands) != strings.size())
    throw Error(ErrorCode::ArityMismatch, "embedding needs one target string per string of the tangle");
  for (std::size_t m = 0; m < strings.size(); ++m)
    if (strings[m] < 1 || strings[m] > n || (m > 0 && strings[m] <= strings[m - 1]))
      throw Error(ErrorCode::ArityMismatch, "target strings must increase within 1.." + std::to_string(n));
  GeoWord out;
  out.strands = n;
  std::vector<int> moves;  // crossing positions, moving string coming from the right
  for (std::size_t m = 1; m < strings.size(); ++m) {
    const int target = strings[0] + static_cast<int>(m);
    for (int p = strings[m]; p > target; --p) {
      moves.push_back(p - 1);
      out.events.push_back({GeoKind::Cross, p - 1, false});
    }
  }
  for (GeoEvent e : to_geometric(tau).events) {
    e.position += strings[0] - 1;
    out.events.push_back(e);
  }
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.events.push_back({GeoKind::Cross, *it, true});
  return from_geometric(out);
}

}  // namespace strlink::fixtures
