#include "strlink/conway.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace strlink {

bool ConwayPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

void ConwayPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool ConwayPoly::operator==(const ConwayPoly& o) const {
  ConwayPoly a = *this, b = o;
  a.trim();
  b.trim();
  return a.coeffs == b.coeffs;
}

std::string ConwayPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::int64_t c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "z";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GaussCode gauss_code(const TangleWord& closed) {
  if (!closed.closed) throw Error(ErrorCode::NotClosed, "Conway polynomial needs a closed diagram");
  if (closed.singular && closed.double_point_count() > 0)
    throw Error(ErrorCode::SingularInput, "Conway polynomial of a singular diagram");
  const StrandTrace st = validate(closed);
  GaussCode g;
  for (const CrossingRecord& c : st.crossings) g.sign.push_back(c.sign);
  for (const auto& list : st.visits) {
    std::vector<GaussCode::Pass> comp;
    for (const Visit& v : list) comp.push_back({v.crossing, st.over(v)});
    g.components.push_back(std::move(comp));
  }
  return g;
}

GaussCode smooth_code(const GaussCode& g, int x) {
  GaussCode out;
  out.sign = g.sign;
  out.sign[static_cast<std::size_t>(x)] = 0;
  std::vector<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t c = 0; c < g.components.size(); ++c)
    for (std::size_t i = 0; i < g.components[c].size(); ++i)
      if (g.components[c][i].crossing == x) at.emplace_back(c, i);
  const auto [c1, i1] = at[0];
  const auto [c2, i2] = at[1];
  for (std::size_t c = 0; c < g.components.size(); ++c)
    if (c != c1 && c != c2) out.components.push_back(g.components[c]);
  if (c1 == c2) {
    const auto& comp = g.components[c1];
    std::vector<GaussCode::Pass> inner(comp.begin() + static_cast<std::ptrdiff_t>(i1) + 1,
                                       comp.begin() + static_cast<std::ptrdiff_t>(i2));
    std::vector<GaussCode::Pass> outer(comp.begin() + static_cast<std::ptrdiff_t>(i2) + 1, comp.end());
    outer.insert(outer.end(), comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(i1));
    out.components.push_back(std::move(outer));
    out.components.push_back(std::move(inner));
  } else {
    auto rotated = [&](std::size_t c, std::size_t i) {
      const auto& comp = g.components[c];
      std::vector<GaussCode::Pass> r(comp.begin() + static_cast<std::ptrdiff_t>(i) + 1, comp.end());
      r.insert(r.end(), comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(i));
      return r;
    };
    auto merged = rotated(c1, i1);
    auto second = rotated(c2, i2);
    merged.insert(merged.end(), second.begin(), second.end());
    out.components.push_back(std::move(merged));
  }
  return out;
}

GaussCode switch_code(const GaussCode& g, int x) {
  GaussCode out = g;
  out.sign[static_cast<std::size_t>(x)] = -out.sign[static_cast<std::size_t>(x)];
  for (auto& comp : out.components)
    for (auto& pass : comp)
      if (pass.crossing == x) pass.over = !pass.over;
  return out;
}

namespace {

using Poly = std::vector<std::int64_t>;

void add_into(Poly& acc, const Poly& p, std::int64_t scale, int shift) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + static_cast<std::size_t>(shift)] += scale * p[k];
}

class Skein {
 public:
  Poly eval(GaussCode g) {
    remove_kinks(g);
    if (split(g)) return {};
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // First crossing met from below while walking components in order.
    std::vector<char> seen(g.sign.size(), 0);
    int bad = -1;
    for (const auto& comp : g.components) {
      for (const auto& pass : comp) {
        if (seen[static_cast<std::size_t>(pass.crossing)]) continue;
        seen[static_cast<std::size_t>(pass.crossing)] = 1;
        if (!pass.over) {
          bad = pass.crossing;
          break;
        }
      }
      if (bad >= 0) break;
    }
    Poly result;
    if (bad < 0) {
      if (g.components.size() == 1) result = {1};
    } else {
      const int eps = g.sign[static_cast<std::size_t>(bad)];
      // nabla(L_eps) = nabla(L_-eps) + eps * z * nabla(L_0)
      result = eval(switch_code(g, bad));
      add_into(result, eval(smooth_code(g, bad)), eps, 1);
    }
    memo_.emplace(key, result);
    return result;
  }

  static int live_crossings(const GaussCode& g) {
    return static_cast<int>(std::count_if(g.sign.begin(), g.sign.end(), [](int s) { return s != 0; }));
  }

  static void remove_kinks(GaussCode& g) {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& comp : g.components) {
        const std::size_t m = comp.size();
        for (std::size_t i = 0; i < m && m >= 2; ++i) {
          const std::size_t j = (i + 1) % m;
          if (comp[i].crossing == comp[j].crossing) {
            const int x = comp[i].crossing;
            g.sign[static_cast<std::size_t>(x)] = 0;
            comp.erase(std::remove_if(comp.begin(), comp.end(),
                                      [x](const GaussCode::Pass& p) { return p.crossing == x; }),
                       comp.end());
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }

  // A diagram whose components fall into several crossing-connected groups
  // represents a split link.
  static bool split(const GaussCode& g) {
    const std::size_t m = g.components.size();
    if (m <= 1) return false;
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<long> first(g.sign.size(), -1);
    for (std::size_t c = 0; c < m; ++c)
      for (const auto& pass : g.components[c]) {
        long& f = first[static_cast<std::size_t>(pass.crossing)];
        if (f < 0) f = static_cast<long>(c);
        else parent[find(static_cast<std::size_t>(f))] = find(c);
      }
    const std::size_t root = find(0);
    for (std::size_t c = 1; c < m; ++c)
      if (find(c) != root) return true;
    return false;
  }

  static std::string canonical_key(const GaussCode& g) {
    std::vector<int> label(g.sign.size(), -1);
    int next = 0;
    std::string key;
    key.reserve(64);
    for (const auto& comp : g.components) {
      key.push_back('|');
      for (const auto& pass : comp) {
        int& l = label[static_cast<std::size_t>(pass.crossing)];
        if (l < 0) l = next++;
        key.push_back(static_cast<char>('0' + (l % 64)));
        key.push_back(static_cast<char>('A' + (l / 64)));
        key.push_back(pass.over ? 'o' : 'u');
        key.push_back(g.sign[static_cast<std::size_t>(pass.crossing)] > 0 ? '+' : '-');
      }
    }
    return key;
  }

 private:
  std::unordered_map<std::string, Poly> memo_;
};

}  // namespace

ConwayPoly conway(const GaussCode& code, int crossing_budget) {
  GaussCode g = code;
  Skein::remove_kinks(g);
  if (Skein::live_crossings(g) > crossing_budget)
    throw Error(ErrorCode::RecursionBudgetExceeded,
                std::to_string(Skein::live_crossings(g)) + " crossings exceed the budget of " +
                    std::to_string(crossing_budget));
  Skein skein;
  ConwayPoly p{skein.eval(std::move(g))};
  p.trim();
  return p;
}

ConwayPoly conway(const TangleWord& closed, int crossing_budget) {
  return conway(gauss_code(closed), crossing_budget);
}

std::int64_t casson_knot(const TangleWord& closed, int crossing_budget) {
  const GaussCode g = gauss_code(closed);
  if (g.components.size() != 1)
    throw Error(ErrorCode::MultiComponent, "Casson invariant needs a knot diagram");
  return conway(g, crossing_budget).coefficient(2);
}

namespace {

// Laurent-free integer polynomials in t, coefficient k multiplies t^k.
using TPoly = std::vector<std::int64_t>;

void tidy(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  tidy(r);
  return r;
}

TPoly sub(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  tidy(r);
  return r;
}

// Exact division; the Bareiss recurrence guarantees divisibility.
TPoly exact_div(TPoly a, const TPoly& b) {
  tidy(a);
  if (a.empty()) return {};
  const std::size_t db = b.size() - 1;
  TPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    if (a[k] % b.back() != 0) throw Error(ErrorCode::Inconsistent, "inexact polynomial division");
    const std::int64_t c = a[k] / b.back();
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  tidy(q);
  return q;
}

TPoly determinant(std::vector<std::vector<TPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  TPoly prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
    prev = m[k][k];
  }
  TPoly d = m[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : d) c = -c;
  return d;
}

}  // namespace

ConwayPoly knot_conway(const GaussCode& code) {
  if (code.components.size() != 1)
    throw Error(ErrorCode::MultiComponent, "Alexander route needs a knot diagram");
  GaussCode g = code;
  Skein::remove_kinks(g);
  const auto& comp = g.components[0];
  std::vector<std::size_t> unders;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!comp[i].over) unders.push_back(i);
  const std::size_t c = unders.size();
  if (c == 0) return ConwayPoly{{1}};

  // Arc a starts at under-pass unders[a] and ends at under-pass unders[a+1].
  std::vector<int> arc_at(comp.size(), 0);
  for (std::size_t a = 0; a < c; ++a) {
    const std::size_t end = a + 1 < c ? unders[a + 1] : unders[0] + comp.size();
    for (std::size_t i = unders[a]; i < end; ++i) arc_at[i % comp.size()] = static_cast<int>(a);
  }
  std::vector<std::vector<TPoly>> rows;
  for (std::size_t a = 0; a < c; ++a) {
    const std::size_t pos = unders[a];
    const int x = comp[pos].crossing;
    const int incoming = static_cast<int>((a + c - 1) % c);
    const int outgoing = static_cast<int>(a);
    int over_arc = 0;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (comp[i].crossing == x && comp[i].over) over_arc = arc_at[i];
    std::vector<TPoly> row(c);
    auto add = [&](int arc, const TPoly& p) {
      TPoly& e = row[static_cast<std::size_t>(arc)];
      if (e.size() < p.size()) e.resize(p.size(), 0);
      for (std::size_t k = 0; k < p.size(); ++k) e[k] += p[k];
      tidy(e);
    };
    if (g.sign[static_cast<std::size_t>(x)] > 0) {
      add(over_arc, {1, -1});
      add(incoming, {0, 1});
      add(outgoing, {-1});
    } else {
      add(over_arc, {-1, 1});
      add(incoming, {1});
      add(outgoing, {0, -1});
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<TPoly>> minor;
  for (std::size_t r = 1; r < c; ++r) minor.emplace_back(rows[r].begin() + 1, rows[r].end());
  TPoly d = determinant(std::move(minor));
  std::size_t low = 0;
  while (low < d.size() && d[low] == 0) ++low;
  d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(low));
  if (d.empty() || (d.size() - 1) % 2 != 0) throw Error(ErrorCode::Inconsistent, "malformed Alexander polynomial");
  std::int64_t at_one = 0;
  for (auto v : d) at_one += v;
  if (at_one == -1)
    for (auto& v : d) v = -v;
  else if (at_one != 1)
    throw Error(ErrorCode::Inconsistent, "Alexander polynomial does not evaluate to 1 at t = 1");

  // Peel the top degree: (t^{1/2} - t^{-1/2})^{2h} has t^{+-h} coefficient 1.
  const std::size_t h = (d.size() - 1) / 2;
  std::vector<std::int64_t> q(d.begin(), d.end());  // q[k] multiplies t^{k-h}
  ConwayPoly out;
  out.coeffs.assign(2 * h + 1, 0);
  for (std::size_t deg = h + 1; deg-- > 0;) {
    const std::int64_t top = q[h + deg];
    out.coeffs[2 * deg] = top;
    // binomial expansion of (t - 2 + 1/t)^deg
    std::int64_t binom = 1;
    for (std::size_t m = 0; m <= 2 * deg; ++m) {
      const std::int64_t term = (m % 2 == 0 ? 1 : -1) * binom;
      q[h + deg - m] -= top * term;
      binom = binom * static_cast<std::int64_t>(2 * deg - m) / static_cast<std::int64_t>(m + 1);
    }
  }
  out.trim();
  return out;
}

ConwayPoly knot_conway(const TangleWord& closed) { return knot_conway(gauss_code(closed)); }

}  // namespace strlink
