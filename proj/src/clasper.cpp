#include "strlink/clasper.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strlink/fixtures.hpp"
#include "strlink/linalg.hpp"
#include "strlink/vassiliev.hpp"

namespace strlink {

namespace {

void check_color(int c, int n) {
  if (c < 1 || c > n)
    throw Error(ErrorCode::BadColor, "color " + std::to_string(c) + " outside 1.." + std::to_string(n));
}

// Sign of the permutation sorting three distinct values.
int sort_sign(std::array<int, 3> v) {
  int s = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (v[a] > v[b]) s = -s;
  return s;
}

// Rotates a diagram with exactly two colors so that the repeated color
// comes first: Y[(i,m);(i,n);j].
YDiagram pair_first(const YDiagram& y) {
  YDiagram r = y;
  for (int k = 0; k < 3; ++k) {
    if (r.legs[0].color == r.legs[1].color) return r;
    std::rotate(r.legs.begin(), r.legs.begin() + 1, r.legs.end());
  }
  return r;
}

void check_diagram(const YDiagram& y, int n) {
  for (const YLeg& l : y.legs) check_color(l.color, n);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (y.legs[a].color == y.legs[b].color && y.legs[a].tiebreak == y.legs[b].tiebreak)
        throw Error(ErrorCode::BadColor, "legs of equal color need distinct tiebreaks in " + y.str());
}

}  // namespace

A1Element a1_normalize(const A1Element& x, int n) {
  A1Element out;
  for (const auto& [s, k] : x) {
    check_color(s.i, n);
    check_color(s.j, n);
    if (s.i == s.j || k == 0) continue;
    out[{std::min(s.i, s.j), std::max(s.i, s.j)}] += k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

YDiagram YDiagram::distinct(int i, int j, int k) { return {{{{i, 1}, {j, 1}, {k, 1}}}}; }
YDiagram YDiagram::pair(int i, int m, int n, int j) { return {{{{i, m}, {i, n}, {j, 1}}}}; }
YDiagram YDiagram::triple(int i, int m, int n, int l) { return {{{{i, m}, {i, n}, {i, l}}}}; }

int YDiagram::distinct_colors() const {
  std::set<int> s;
  for (const YLeg& l : legs) s.insert(l.color);
  return static_cast<int>(s.size());
}

std::string YDiagram::str() const {
  std::ostringstream os;
  os << "Y[";
  const int d = distinct_colors();
  for (int k = 0; k < 3; ++k) {
    if (k) os << ";";
    if (d == 3) os << legs[k].color;
    else os << "(" << legs[k].color << "," << legs[k].tiebreak << ")";
  }
  os << "]";
  return os.str();
}

std::pair<int, YDiagram> a2_normal(const YDiagram& y, int n) {
  check_diagram(y, n);
  switch (y.distinct_colors()) {
    case 3: {
      std::array<int, 3> c{y.legs[0].color, y.legs[1].color, y.legs[2].color};
      const int s = sort_sign(c);
      std::sort(c.begin(), c.end());
      return {s, YDiagram::distinct(c[0], c[1], c[2])};
    }
    case 2: {
      const YDiagram r = pair_first(y);
      const int s = r.legs[0].tiebreak < r.legs[1].tiebreak ? 1 : -1;
      const int i = r.legs[0].color, j = r.legs[2].color;
      return {s, YDiagram::pair(std::min(i, j), 1, 2, std::max(i, j))};
    }
    default:
      return {sort_sign({y.legs[0].tiebreak, y.legs[1].tiebreak, y.legs[2].tiebreak}),
              YDiagram::triple(y.legs[0].color, 1, 2, 3)};
  }
}

A2Element a2_normalize(const A2Element& x, int n) {
  A2Element out;
  for (const auto& [y, k] : x) {
    const auto [s, b] = a2_normal(y, n);
    out[b] += s * k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<YDiagram> a2_basis(int n) {
  std::vector<YDiagram> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(YDiagram::distinct(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(YDiagram::pair(i, 1, 2, j));
  for (int i = 1; i <= n; ++i) out.push_back(YDiagram::triple(i, 1, 2, 3));
  return out;
}

std::vector<YDiagram> all_ydiagrams(int n) {
  std::vector<YDiagram> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int ta = 1; ta <= 3; ++ta)
          for (int tb = 1; tb <= 3; ++tb)
            for (int tc = 1; tc <= 3; ++tc) {
              const YDiagram y{{{{a, ta}, {b, tb}, {c, tc}}}};
              bool ok = true;
              for (int p = 0; p < 3 && ok; ++p) {
                const int same = static_cast<int>(std::count_if(
                    y.legs.begin(), y.legs.end(), [&](const YLeg& l) { return l.color == y.legs[p].color; }));
                if (same == 1 && y.legs[p].tiebreak != 1) ok = false;
                for (int q = p + 1; q < 3; ++q)
                  if (y.legs[p].color == y.legs[q].color && y.legs[p].tiebreak == y.legs[q].tiebreak) ok = false;
              }
              if (ok) out.push_back(y);
            }
  return out;
}

ClassVector ClassVector::zero(int n) {
  ClassVector v;
  v.n = n;
  return v;
}

std::size_t ClassVector::dimension(int n) {
  const auto m = static_cast<std::size_t>(n);
  return m * (m - 1) * (m - 2) / 6 + m * (m + 1) / 2;
}

std::vector<std::int64_t> ClassVector::coordinates() const {
  std::vector<std::int64_t> out;
  const auto get = [](const auto& map, const auto& key) {
    const auto it = map.find(key);
    return it == map.end() ? std::int64_t{0} : it->second;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(get(wedge, std::array<int, 3>{i, j, k}));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(get(sym, std::pair<int, int>{i, j}));
  return out;
}

ClassVector eta(const YDiagram& y, int n) {
  check_diagram(y, n);
  ClassVector v = ClassVector::zero(n);
  switch (y.distinct_colors()) {
    case 3: {
      std::array<int, 3> c{y.legs[0].color, y.legs[1].color, y.legs[2].color};
      const int s = sort_sign(c);
      std::sort(c.begin(), c.end());
      v.wedge[c] = s;
      break;
    }
    case 2: {
      const YDiagram r = pair_first(y);
      const int i = r.legs[0].color, j = r.legs[2].color;
      v.sym[{std::min(i, j), std::max(i, j)}] = r.legs[1].tiebreak > r.legs[0].tiebreak ? 1 : -1;
      break;
    }
    default:
      v.sym[{y.legs[0].color, y.legs[0].color}] =
          sort_sign({y.legs[0].tiebreak, y.legs[1].tiebreak, y.legs[2].tiebreak});
  }
  return v;
}

ClassVector eta(const A2Element& x, int n) {
  ClassVector v = ClassVector::zero(n);
  for (const auto& [y, k] : x) {
    const ClassVector e = eta(y, n);
    for (const auto& [key, c] : e.wedge) v.wedge[key] += k * c;
    for (const auto& [key, c] : e.sym) v.sym[key] += k * c;
  }
  std::erase_if(v.wedge, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(v.sym, [](const auto& kv) { return kv.second == 0; });
  return v;
}

std::size_t a2_rank(int n) {
  linalg::Matrix rows;
  for (const YDiagram& y : all_ydiagrams(n)) {
    std::vector<linalg::Rational> row;
    for (std::int64_t c : eta(y, n).coordinates()) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows), ClassVector::dimension(n));
}

TangleWord psi1_rep(const Strut& s, int n) {
  check_color(s.i, n);
  check_color(s.j, n);
  if (s.i == s.j) return TangleWord::identity(n);
  const int at[] = {std::min(s.i, s.j), std::max(s.i, s.j)};
  return fixtures::embed(fixtures::clasp(-1), n, at);
}

TangleWord psi2_rep(const YDiagram& y, int n) {
  const auto [sign, b] = a2_normal(y, n);
  switch (b.distinct_colors()) {
    case 3: {
      const int at[] = {b.legs[0].color, b.legs[1].color, b.legs[2].color};
      return fixtures::embed(sign > 0 ? fixtures::borromean() : fixtures::fixture("borromean_inverse"), n, at);
    }
    case 2: {
      const YDiagram r = pair_first(y);
      const int repeated = r.legs[0].color, other = r.legs[2].color;
      TangleWord tau = sign > 0 ? fixtures::whitehead_figure_eight() : fixtures::whitehead();
      if (repeated > other) tau = reverse_strings(tau);
      const int at[] = {std::min(repeated, other), std::max(repeated, other)};
      return fixtures::embed(tau, n, at);
    }
    default: {
      const int at[] = {b.legs[0].color};
      return fixtures::embed(sign > 0 ? fixtures::long_trefoil() : fixtures::long_figure_eight(), n, at);
    }
  }
}

ClassVector invariant_vector(const TangleWord& sigma) {
  if (sigma.closed) throw Error(ErrorCode::ArityMismatch, "invariant vector of a closed word");
  const int n = sigma.strands;
  ClassVector v = ClassVector::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (const auto m = milnor(sigma, i, j, k)) v.wedge[{i, j, k}] = m;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (const auto x = v2_pair(sigma, i, j)) v.sym[{i, j}] = -x;
  for (int i = 1; i <= n; ++i)
    if (const auto p = casson_of_string(sigma, i)) v.sym[{i, i}] = p;
  return v;
}

A1Element mu2_vector(const TangleWord& sigma) {
  if (sigma.closed) throw Error(ErrorCode::ArityMismatch, "linking vector of a closed word");
  A1Element out;
  for (int i = 1; i <= sigma.strands; ++i)
    for (int j = i + 1; j <= sigma.strands; ++j)
      if (const auto l = linking(sigma, i, j)) out[{i, j}] = -l;
  return out;
}

bool c2_equivalent(const TangleWord& sigma, const TangleWord& tau) {
  if (sigma.strands != tau.strands) throw Error(ErrorCode::ArityMismatch, "C2 comparison needs equal string counts");
  return mu2_vector(sigma) == mu2_vector(tau);
}

bool c3_equivalent(const TangleWord& sigma, const TangleWord& tau) {
  if (sigma.strands != tau.strands) throw Error(ErrorCode::ArityMismatch, "C3 comparison needs equal string counts");
  for (const TangleWord* w : {&sigma, &tau}) {
    const A1Element m = mu2_vector(*w);
    if (!m.empty())
      throw Error(ErrorCode::NotInSL2, "linking number mu" + std::to_string(m.begin()->first.i) +
                                           std::to_string(m.begin()->first.j) + " = " +
                                           std::to_string(-m.begin()->second) + " is nonzero");
  }
  return invariant_vector(sigma) == invariant_vector(tau);
}

std::string format(const A1Element& x) {
  std::ostringstream os;
  for (const auto& [s, k] : x) os << "I[" << s.i << "," << s.j << "] = " << k << "\n";
  return os.str();
}

std::string format(const ClassVector& v) {
  std::ostringstream os;
  for (const auto& [key, k] : v.wedge) os << "wedge[" << key[0] << "," << key[1] << "," << key[2] << "] = " << k << "\n";
  for (const auto& [key, k] : v.sym) os << "sym[" << key.first << "," << key.second << "] = " << k << "\n";
  return os.str();
}

}  // namespace strlink
