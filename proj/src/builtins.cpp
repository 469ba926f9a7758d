#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "strlink/weights.hpp"

namespace strlink {

namespace {

struct Table {
  int n;
  int delta_v;
  std::vector<std::pair<const char*, std::int64_t>> values;
};

// Order-two classes used below, on the canonical strands of each table.
//   one string:    n1:(1.1-1.3)(1.2-1.4)           interleaved
//   two strings:   DDA (1.1-2.1)(1.2-2.2)           parallel mixed chords
//                  DDB (1.1-2.2)(1.2-2.1)           crossed mixed chords
//                  DDC (1.1-1.3)(1.2-2.1), and its mirror (1.1-2.2)(2.1-2.3)
//   three strings: TDA (1.1-3.1)(2.1-3.2)   TDB (1.1-3.2)(2.1-3.1)
//                  TDC (1.1-2.2)(2.1-3.1)   TDD (1.1-2.1)(2.2-3.1)
//                  TDE (1.1-2.1)(1.2-3.1)   TDF (1.1-3.1)(1.2-2.1)
//   four strings:  QDA (1.1-2.1)(3.1-4.1)   QDB (1.1-3.1)(2.1-4.1)
//                  QDD (1.1-4.1)(2.1-3.1)
constexpr const char* kInterleaved = "n1:(1.1-1.3)(1.2-1.4)";
constexpr const char* kDDA = "n2:(1.1-2.1)(1.2-2.2)";
constexpr const char* kDDB = "n2:(1.1-2.2)(1.2-2.1)";
constexpr const char* kDDC1 = "n2:(1.1-1.3)(1.2-2.1)";
constexpr const char* kDDC2 = "n2:(1.1-2.2)(2.1-2.3)";
constexpr const char* kTDA = "n3:(1.1-3.1)(2.1-3.2)";
constexpr const char* kTDB = "n3:(1.1-3.2)(2.1-3.1)";
constexpr const char* kTDC = "n3:(1.1-2.2)(2.1-3.1)";
constexpr const char* kTDD = "n3:(1.1-2.1)(2.2-3.1)";
constexpr const char* kTDE = "n3:(1.1-2.1)(1.2-3.1)";
constexpr const char* kTDF = "n3:(1.1-3.1)(1.2-2.1)";

const Table kCasson{1, 0, {{kInterleaved, 1}}};
const Table kMuSq{2, 0, {{kDDA, 2}, {kDDB, 2}}};
const Table kV2{2, 0, {{kDDB, 1}, {kDDC1, -1}, {kDDC2, -1}}};

// mu_ij mu_ik, mu_ij mu_jk, mu_ik mu_jk on strings i < j < k.
const Table kProdIjIk{3, 0, {{kTDE, 1}, {kTDF, 1}}};
const Table kProdIjJk{3, 0, {{kTDC, 1}, {kTDD, 1}}};
const Table kProdIkJk{3, 0, {{kTDA, 1}, {kTDB, 1}}};

// Triple linking numbers in the six orders of i < j < k.
const std::map<std::string, Table> kTriple = {
    {"123", {3, 0, {{kTDA, 1}, {kTDD, -1}, {kTDE, 1}}}},
    {"213", {3, 0, {{kTDB, 1}, {kTDD, 1}, {kTDE, -1}}}},
    {"312", {3, 1, {{kTDA, 1}, {kTDC, 1}, {kTDF, -1}}}},
    {"132", {3, 1, {{kTDA, -1}, {kTDD, 1}, {kTDF, 1}}}},
    {"231", {3, 0, {{kTDB, -1}, {kTDC, 1}, {kTDE, 1}}}},
    {"321", {3, 0, {{kTDB, 1}, {kTDC, -1}, {kTDF, 1}}}},
};

// mu_ij mu_kl for the three pairings of i < j < k < l.
const Table kQuadA{4, 0, {{"n4:(1.1-2.1)(3.1-4.1)", 1}}};
const Table kQuadB{4, 0, {{"n4:(1.1-3.1)(2.1-4.1)", 1}}};
const Table kQuadD{4, 0, {{"n4:(1.1-4.1)(2.1-3.1)", 1}}};

WeightSystem make(const std::string& name, const Table& t, std::vector<int> support) {
  WeightSystem w;
  w.name = name;
  w.n = t.n;
  w.delta_v = t.delta_v;
  w.support = std::move(support);
  for (const auto& [key, v] : t.values) w.values[ChordClass::parse(key)] = v;
  return validated(std::move(w));
}

[[noreturn]] void unknown(const std::string& name) {
  throw Error(ErrorCode::UnknownName, "unknown weight system '" + name + "'");
}

// Splits "prefix_a_b_..." into its indices.
std::vector<int> indices_after(const std::string& name, const std::string& prefix) {
  std::vector<int> out;
  std::istringstream is(name.substr(prefix.size()));
  std::string part;
  while (std::getline(is, part, '_')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) unknown(name);
    out.push_back(std::stoi(part));
  }
  for (int i : out)
    if (i < 1) unknown(name);
  return out;
}

std::vector<int> sorted_distinct(const std::vector<int>& v, std::size_t expect, const std::string& name) {
  std::set<int> s(v.begin(), v.end());
  if (s.size() != expect) unknown(name);
  return {s.begin(), s.end()};
}

int local(const std::vector<int>& support, int i) {
  return static_cast<int>(std::find(support.begin(), support.end(), i) - support.begin()) + 1;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

WeightSystem builtin(const std::string& name) {
  if (name == "W12") return make(name, kCasson, {});
  if (name == "W22") return make(name, kV2, {});
  if (starts_with(name, "casson_")) {
    const auto ix = indices_after(name, "casson_");
    if (ix.size() != 1) unknown(name);
    return make(name, kCasson, ix);
  }
  if (starts_with(name, "mu_sq_")) {
    const auto ix = indices_after(name, "mu_sq_");
    if (ix.size() != 2) unknown(name);
    return make(name, kMuSq, sorted_distinct(ix, 2, name));
  }
  if (starts_with(name, "V2_")) {
    const auto ix = indices_after(name, "V2_");
    if (ix.size() != 2) unknown(name);
    return make(name, kV2, sorted_distinct(ix, 2, name));
  }
  if (starts_with(name, "mu_prod_")) {
    const auto ix = indices_after(name, "mu_prod_");
    if (ix.size() != 4 || ix[0] == ix[1] || ix[2] == ix[3]) unknown(name);
    const auto support = sorted_distinct(ix, 3, name);
    const std::set<int> p{local(support, ix[0]), local(support, ix[1])};
    const std::set<int> q{local(support, ix[2]), local(support, ix[3])};
    // The product is named by the pair that does not occur.
    std::set<std::set<int>> pairs{p, q};
    if (!pairs.contains({2, 3})) return make(name, kProdIjIk, support);
    if (!pairs.contains({1, 3})) return make(name, kProdIjJk, support);
    return make(name, kProdIkJk, support);
  }
  if (starts_with(name, "mu_")) {
    const auto ix = indices_after(name, "mu_");
    if (ix.size() == 3) {
      const auto support = sorted_distinct(ix, 3, name);
      std::string order;
      for (int i : ix) order += static_cast<char>('0' + local(support, i));
      return make(name, kTriple.at(order), support);
    }
    if (ix.size() == 4) {
      if (ix[0] == ix[1] || ix[2] == ix[3]) unknown(name);
      const auto support = sorted_distinct(ix, 4, name);
      int partner = 0;
      if (local(support, ix[0]) == 1) partner = local(support, ix[1]);
      else if (local(support, ix[1]) == 1) partner = local(support, ix[0]);
      else if (local(support, ix[2]) == 1) partner = local(support, ix[3]);
      else partner = local(support, ix[2]);
      if (partner == 2) return make(name, kQuadA, support);
      if (partner == 3) return make(name, kQuadB, support);
      return make(name, kQuadD, support);
    }
  }
  unknown(name);
}

std::vector<std::string> builtin_names(int max_strands) {
  const auto s = [](auto... v) {
    std::string out;
    ((out += "_" + std::to_string(v)), ...);
    return out;
  };
  std::vector<std::string> out{"W12"};
  if (max_strands >= 2) out.push_back("W22");
  const int n = max_strands;
  for (int i = 1; i <= n; ++i) out.push_back("casson" + s(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back("mu_sq" + s(i, j));
      out.push_back("V2" + s(i, j));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        out.push_back("mu_prod" + s(i, j, i, k));
        out.push_back("mu_prod" + s(i, j, j, k));
        out.push_back("mu_prod" + s(i, k, j, k));
        const std::array<std::array<int, 3>, 6> orders{
            {{i, j, k}, {j, i, k}, {k, i, j}, {i, k, j}, {j, k, i}, {k, j, i}}};
        for (const auto& o : orders) out.push_back("mu" + s(o[0], o[1], o[2]));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          out.push_back("mu" + s(i, j, k, l));
          out.push_back("mu" + s(i, k, j, l));
          out.push_back("mu" + s(i, l, j, k));
        }
  return out;
}

}  // namespace strlink
