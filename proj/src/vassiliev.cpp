#include "strlink/vassiliev.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>

#include "strlink/conway.hpp"
#include "strlink/milnor.hpp"
#include "strlink/moves.hpp"

namespace strlink {

namespace {

void require_strands(const TangleWord& w, int n, const char* what) {
  if (w.closed || w.strands != n)
    throw Error(ErrorCode::ArityMismatch, std::string(what) + " needs an open " + std::to_string(n) + "-string link");
}

void require_index(const TangleWord& w, int i) {
  if (i < 1 || i > w.strands) throw Error(ErrorCode::ArityMismatch, "string index " + std::to_string(i) + " out of range");
}

const WeightSystem& cached_builtin(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, WeightSystem> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, builtin(name)).first;
  return it->second;
}

}  // namespace

std::int64_t linking(const TangleWord& sigma, int i, int j) {
  if (sigma.closed) throw Error(ErrorCode::ArityMismatch, "linking numbers of string links need an open word");
  require_index(sigma, i);
  require_index(sigma, j);
  if (i == j) throw Error(ErrorCode::ArityMismatch, "linking number of a string with itself");
  const StrandTrace st = validate(sigma);
  std::int64_t sum = 0;
  for (const CrossingRecord& c : st.crossings) {
    const int a = c.slash.component + 1, b = c.back.component + 1;
    if ((a == i && b == j) || (a == j && b == i)) sum += c.sign;
  }
  return sum / 2;
}

std::int64_t casson_long(const TangleWord& sigma1) {
  require_strands(sigma1, 1, "casson_long");
  return lannes_eval(cached_builtin("W12"), sigma1);
}

std::int64_t casson_def(const TangleWord& sigma1) {
  require_strands(sigma1, 1, "casson_def");
  return knot_conway(close(sigma1)).coefficient(2);
}

std::int64_t casson_of_string(const TangleWord& sigma, int i) {
  require_index(sigma, i);
  const int keep[] = {i};
  return casson_def(sublink(sigma, keep));
}

std::int64_t v2(const TangleWord& sigma2) {
  require_strands(sigma2, 2, "v2");
  return lannes_eval(cached_builtin("W22"), sigma2);
}

std::int64_t v2_def(const TangleWord& sigma2) {
  require_strands(sigma2, 2, "v2_def");
  return knot_conway(plat_close(sigma2)).coefficient(2) - casson_of_string(sigma2, 1) -
         casson_of_string(sigma2, 2);
}

std::int64_t v2_pair(const TangleWord& sigma, int i, int j) {
  require_index(sigma, i);
  require_index(sigma, j);
  const int keep[] = {std::min(i, j), std::max(i, j)};
  return v2_def(sublink(sigma, keep));
}

std::int64_t v_pm(const TangleWord& sigma3, int sign) {
  require_strands(sigma3, 3, "v_pm");
  return v2_def(tilde(sigma3, sign));
}

std::int64_t mu123(const TangleWord& sigma3) {
  require_strands(sigma3, 3, "mu123");
  return lannes_eval(cached_builtin("mu_1_2_3"), sigma3);
}

std::int64_t mu123_def(const TangleWord& sigma3) {
  require_strands(sigma3, 3, "mu123_def");
  return -v_pm(sigma3, -1) + v2_pair(sigma3, 1, 2) + v2_pair(sigma3, 2, 3);
}


std::int64_t milnor(const TangleWord& sigma, int a, int b, int c) {
  for (int i : {a, b, c}) require_index(sigma, i);
  if (a == b || b == c || a == c) throw Error(ErrorCode::ArityMismatch, "triple linking needs distinct indices");
  if (a < b && b < c) {
    const int keep[] = {a, b, c};
    return mu123_def(sublink(sigma, keep));
  }
  return milnor_magnus(sigma, a, b, c);
}

std::int64_t milnor_lannes(const TangleWord& sigma, int a, int b, int c) {
  for (int i : {a, b, c}) require_index(sigma, i);
  return lannes_eval(cached_builtin("mu_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c)),
                     sigma);
}

std::int64_t evaluate_singular(const Evaluator& v, const TangleWord& sigma) {
  std::vector<int> doubles;
  const auto events = sigma.crossing_events();
  for (std::size_t x = 0; x < events.size(); ++x)
    if (sigma.events[events[x]].kind == EventKind::CrossDouble) doubles.push_back(static_cast<int>(x));
  if (doubles.empty()) return v(sigma);
  if (doubles.size() > 20) throw Error(ErrorCode::ArityMismatch, "too many double points to expand");
  std::int64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << doubles.size()); ++mask) {
    TangleWord w = sigma;
    int parity = 1;
    for (std::size_t k = 0; k < doubles.size(); ++k) {
      const int s = (mask >> k) & 1u ? -1 : 1;
      parity *= s;
      w = resolve_double(w, doubles[k], s);
    }
    total += parity * v(w);
  }
  return total;
}

// Universal order-two expansion ----------------------------------------------

std::int64_t InitialData::at(const ChordClass& c) const {
  const auto it = order_two.find(c);
  if (it == order_two.end()) throw Error(ErrorCode::UnknownName, "no initial datum for class " + c.key());
  return it->second;
}

TangleWord single_double_point(int n, int i, int j) {
  if (i < 1 || j <= i || j > n) throw Error(ErrorCode::ArityMismatch, "bad strings for a double point");
  // Bring string i next to string j over the strings between them, clasp
  // the two, and return.
  GeoWord g;
  g.strands = n;
  for (int p = i; p < j - 1; ++p) g.events.push_back({GeoKind::Cross, p, true});
  g.events.push_back({GeoKind::Double, j - 1, true});
  g.events.push_back({GeoKind::Cross, j - 1, true});
  for (int p = j - 2; p >= i; --p) g.events.push_back({GeoKind::Cross, p, false});
  return from_geometric(g);
}

namespace {

// Searches seeded random singular words for one realizing each needed class.
std::map<ChordClass, TangleWord> search_representatives(int n, const std::set<ChordClass>& wanted) {
  std::map<ChordClass, TangleWord> out;
  Rng rng(0x5eed0000u + static_cast<std::uint64_t>(n));
  for (int attempt = 0; attempt < 200000 && out.size() < wanted.size(); ++attempt) {
    GeneratorOptions o;
    o.strands = n;
    o.min_crossings = 2;
    o.max_crossings = 4 + attempt / 20000;
    o.max_extra_points = 2;
    const TangleWord w = random_singular(rng, o, 2);
    const ChordClass c = singular_class(w);
    if (!wanted.count(c)) continue;
    auto it = out.find(c);
    if (it == out.end()) out.emplace(c, w);
    else if (w.crossing_count() < it->second.crossing_count()) it->second = w;
  }
  return out;
}

const std::map<ChordClass, TangleWord>& representatives(int n) {
  static std::mutex mu;
  static std::map<int, std::map<ChordClass, TangleWord>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::set<ChordClass> wanted;
  for (const ChordClass& c : enumerate_classes(n, 2))
    if (c.admissible() && c.support().size() >= 1) wanted.insert(c);
  auto reps = search_representatives(n, wanted);
  return cache.emplace(n, std::move(reps)).first->second;
}

}  // namespace

TangleWord class_representative(const ChordClass& c) {
  if (c.order() == 0) return TangleWord::identity(c.n);
  if (c.order() == 1) {
    const Chord& ch = c.chords[0];
    if (ch.self()) throw Error(ErrorCode::UnknownName, "a single self chord is isolated");
    return single_double_point(c.n, ch.a.strand, ch.b.strand);
  }
  const auto& reps = representatives(c.n);
  const auto it = reps.find(c);
  if (it == reps.end()) throw Error(ErrorCode::UnknownName, "no representative found for class " + c.key());
  return it->second;
}

InitialData initial_data(const Evaluator& v, int n) {
  InitialData d;
  d.n = n;
  d.constant = v(TangleWord::identity(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d.single[{i, j}] = evaluate_singular(v, single_double_point(n, i, j));
  for (const ChordClass& c : enumerate_classes(n, 2)) {
    if (!c.admissible()) continue;
    d.order_two[c] = evaluate_singular(v, class_representative(c));
  }
  for (int i = 1; i <= n; ++i) {
    const ChordClass ud = ChordClass::canonical(n, {{{i, 1}, {i, 3}}, {{i, 2}, {i, 4}}});
    d.self[i] = d.at(ud);
  }
  return d;
}

void check_order_two(const Evaluator& v, int n, int probes, std::uint64_t seed) {
  Rng rng(seed);
  for (int k = 0; k < probes; ++k) {
    GeneratorOptions o;
    o.strands = n;
    o.min_crossings = 3;
    o.max_crossings = 7;
    const TangleWord w = random_singular(rng, o, 3);
    const std::int64_t value = evaluate_singular(v, w);
    if (value != 0)
      throw Error(ErrorCode::NotOrderTwo, "invariant takes value " + std::to_string(value) +
                                              " on a word with three double points");
  }
}

namespace {

// Chord helpers for the classes named in the expansion.
ChordClass two_chords(int n, Chord a, Chord b) { return ChordClass::canonical(n, {a, b}); }
Chord mixed(int s, int rs, int t, int rt) { return {{s, rs}, {t, rt}}; }

}  // namespace

std::int64_t murakami_expansion(const InitialData& data, const TangleWord& sigma) {
  const int n = data.n;
  require_strands(sigma, n, "murakami_expansion");
  std::map<std::pair<int, int>, std::int64_t> mu;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) mu[{i, j}] = linking(sigma, i, j);
  auto m = [&](int i, int j) { return mu.at({std::min(i, j), std::max(i, j)}); };

  // Twice the value, so that the halves stay exact.
  std::int64_t twice = 2 * data.constant;
  for (int i = 1; i <= n; ++i) twice += 2 * data.self.at(i) * casson_of_string(sigma, i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // parallel mixed chords, and a self chord on i around an end of a mixed chord
      const std::int64_t dda = data.at(two_chords(n, mixed(i, 1, j, 1), mixed(i, 2, j, 2)));
      const std::int64_t ddc = data.at(two_chords(n, {{i, 1}, {i, 3}}, mixed(i, 2, j, 1)));
      const std::int64_t sing = data.single.at({i, j});
      twice += (2 * sing - dda) * m(i, j);
      twice += dda * m(i, j) * m(i, j);
      twice -= 2 * ddc * v2_pair(sigma, i, j);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        // Chords ij, ik sharing i; ik, jk sharing k; ij, jk sharing j. The
        // shared-string order picks the class.
        const std::int64_t f = data.at(two_chords(n, mixed(i, 2, j, 1), mixed(i, 1, k, 1)));
        const std::int64_t g = data.at(two_chords(n, mixed(i, 1, k, 2), mixed(j, 1, k, 1)));
        const std::int64_t h = data.at(two_chords(n, mixed(i, 1, j, 2), mixed(j, 1, k, 1)));
        const std::int64_t tdd = data.at(two_chords(n, mixed(i, 1, j, 1), mixed(j, 2, k, 1)));
        twice += 2 * (f * m(i, j) * m(i, k) + g * m(i, k) * m(j, k) + h * m(i, j) * m(j, k));
        twice += 2 * (h - tdd) * milnor(sigma, i, j, k);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const std::int64_t q = data.at(two_chords(n, mixed(i, 1, j, 1), mixed(k, 1, l, 1)));
          const std::int64_t r = data.at(two_chords(n, mixed(i, 1, k, 1), mixed(j, 1, l, 1)));
          const std::int64_t s = data.at(two_chords(n, mixed(i, 1, l, 1), mixed(j, 1, k, 1)));
          twice += 2 * (q * m(i, j) * m(k, l) + r * m(i, k) * m(j, l) + s * m(i, l) * m(j, k));
        }
  if (twice % 2 != 0) throw Error(ErrorCode::Inconsistent, "odd expansion value");
  return twice / 2;
}

// Symmetries of the triple linking numbers -----------------------------------

bool SymmetryReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& p) { return p.second; });
}

SymmetryReport symmetry_check(const TangleWord& sigma3) {
  require_strands(sigma3, 3, "symmetry_check");
  SymmetryReport r;
  std::array<int, 3> p{1, 2, 3};
  do {
    const std::string key = std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
    r.mu[key] = milnor(sigma3, p[0], p[1], p[2]);
  } while (std::next_permutation(p.begin(), p.end()));
  r.mu12 = linking(sigma3, 1, 2);
  r.mu13 = linking(sigma3, 1, 3);
  r.mu23 = linking(sigma3, 2, 3);
  const std::int64_t a = r.mu12, b = r.mu13, c = r.mu23;
  const std::int64_t m = r.mu.at("123");
  r.identities = {
      {"mu123 = -mu213 + mu13 mu23", m == -r.mu.at("213") + b * c},
      {"mu123 = -mu132 + mu12 mu13 - mu13", m == -r.mu.at("132") + a * b - b},
      {"mu123 = -mu321 + mu13 mu23 + mu12 mu13 - mu12 mu23", m == -r.mu.at("321") + b * c + a * b - a * c},
      {"mu123 = mu231 - mu12 mu23 + mu13 mu23", m == r.mu.at("231") - a * c + b * c},
      {"mu123 = mu312 - mu12 mu23 + mu12 mu13 - mu13", m == r.mu.at("312") - a * c + a * b - b},
  };
  return r;
}

std::vector<NamedInvariant> invariant_catalog(int n) {
  std::vector<NamedInvariant> out;
  const auto s = [](auto... v) {
    std::string r;
    ((r += "_" + std::to_string(v)), ...);
    return r;
  };
  for (int i = 1; i <= n; ++i) out.push_back({"phi" + s(i), [i](const TangleWord& w) { return casson_of_string(w, i); }});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({"mu" + s(i, j), [i, j](const TangleWord& w) { return linking(w, i, j); }});
      out.push_back({"mu_sq" + s(i, j), [i, j](const TangleWord& w) {
                       const auto l = linking(w, i, j);
                       return l * l;
                     }});
      out.push_back({"V2" + s(i, j), [i, j](const TangleWord& w) { return v2_pair(w, i, j); }});
      out.push_back({"plat_phi" + s(i, j), [i, j](const TangleWord& w) {
                       const int keep[] = {i, j};
                       return knot_conway(plat_close(sublink(w, keep))).coefficient(2);
                     }});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && j != k && i != k)
          out.push_back({"mu" + s(i, j, k), [i, j, k](const TangleWord& w) { return milnor(w, i, j, k); }});
  const auto product = [](int a, int b, int c, int d) {
    return [=](const TangleWord& w) { return linking(w, a, b) * linking(w, c, d); };
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        out.push_back({"mu_prod" + s(i, j, i, k), product(i, j, i, k)});
        out.push_back({"mu_prod" + s(i, j, j, k), product(i, j, j, k)});
        out.push_back({"mu_prod" + s(i, k, j, k), product(i, k, j, k)});
        for (int l = k + 1; l <= n; ++l) {
          out.push_back({"mu" + s(i, j, k, l), product(i, j, k, l)});
          out.push_back({"mu" + s(i, k, j, l), product(i, k, j, l)});
          out.push_back({"mu" + s(i, l, j, k), product(i, l, j, k)});
        }
      }
  if (n == 3) {
    out.push_back({"V-", [](const TangleWord& w) { return v_pm(w, -1); }});
    out.push_back({"V+", [](const TangleWord& w) { return v_pm(w, 1); }});
  }
  for (const std::string& b : builtin_names(n)) {
    if ((b == "W12" && n != 1) || (b == "W22" && n != 2)) continue;
    out.push_back({"lannes:" + b, [b](const TangleWord& w) { return lannes_eval(cached_builtin(b), w); }});
  }
  return out;
}

Evaluator find_invariant(const std::string& name, int n) {
  for (NamedInvariant& v : invariant_catalog(n))
    if (v.name == name) return std::move(v.eval);
  throw Error(ErrorCode::UnknownName, "no invariant '" + name + "' on " + std::to_string(n) + " strings");
}

std::vector<InvariantValue> all_invariants(const TangleWord& sigma) {
  std::vector<InvariantValue> out;
  if (sigma.closed) {
    const ConwayPoly p = validate(sigma).components == 1 ? knot_conway(sigma) : conway(sigma);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
      out.push_back({"conway", {static_cast<int>(k)}, p.coeffs[k]});
    return out;
  }
  const int n = sigma.strands;
  for (int i = 1; i <= n; ++i) out.push_back({"phi", {i}, lannes_eval(cached_builtin("casson_" + std::to_string(i)), sigma)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({"mu", {i, j}, linking(sigma, i, j)});
      out.push_back({"V2", {i, j},
                     lannes_eval(cached_builtin("V2_" + std::to_string(i) + "_" + std::to_string(j)), sigma)});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back({"mu", {i, j, k}, milnor_lannes(sigma, i, j, k)});
  if (n == 3) {
    out.push_back({"V-", {}, v_pm(sigma, -1)});
    out.push_back({"V+", {}, v_pm(sigma, 1)});
  }
  return out;
}

}  // namespace strlink
