#include "strlink/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strlink/linalg.hpp"

namespace strlink {

using linalg::Rational;

std::int64_t WeightSystem::at(const ChordClass& c) const {
  const auto it = values.find(c);
  return it == values.end() ? 0 : it->second;
}

std::vector<std::string> check_weight(const WeightSystem& w) {
  std::vector<std::string> out;
  for (const auto& [c, v] : w.values) {
    if (c.n != w.n) out.push_back("class " + c.key() + " has the wrong strand count");
    else if (v != 0 && c.order() != 2) out.push_back("class " + c.key() + " is not of order two");
    else if (v != 0 && !c.admissible()) out.push_back("1T: isolated chord in " + c.key());
  }
  for (const FourTermRelation& r : four_term_relations(w.n)) {
    std::int64_t sum = 0;
    for (const auto& [c, k] : r.terms) sum += k * w.at(c);
    if (sum != 0) {
      std::ostringstream os;
      os << "4T (" << r.origin << "):";
      for (const auto& [c, k] : r.terms) os << " " << (k > 0 ? "+" : "") << k << "*" << c.key();
      os << " = " << sum;
      out.push_back(os.str());
    }
  }
  return out;
}

WeightSystem validated(WeightSystem w) {
  const auto v = check_weight(w);
  if (!v.empty()) throw Error(ErrorCode::UnvalidatedWeight, w.name + ": " + v.front());
  w.validated = true;
  return w;
}

namespace {

std::vector<ChordClass> admissible_classes(int n) {
  std::vector<ChordClass> out;
  for (const ChordClass& c : enumerate_classes(n, 2))
    if (c.admissible()) out.push_back(c);
  return out;
}

// 4T relations restricted to admissible classes (the others vanish by 1T).
linalg::Matrix four_term_rows(int n, const std::vector<ChordClass>& cols) {
  std::map<ChordClass, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  linalg::Matrix rows;
  for (const FourTermRelation& r : four_term_relations(n)) {
    std::vector<Rational> row(cols.size(), 0);
    bool any = false;
    for (const auto& [c, k] : r.terms) {
      const auto it = index.find(c);
      if (it == index.end()) continue;
      row[it->second] += k;
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t four_term_quotient_rank(int n) {
  const auto cols = admissible_classes(n);
  return cols.size() - linalg::rank(four_term_rows(n, cols), cols.size());
}

bool inert(const ChordClass& c) {
  if (c.n != 3 || c.chords.empty()) return false;
  return std::all_of(c.chords.begin(), c.chords.end(), [](const Chord& ch) {
    return ch.a.strand == 1 && ch.b.strand == 3;
  });
}

std::map<ChordClass, std::int64_t> lannes_coefficients(const TangleWord& sigma, int delta_v) {
  const std::vector<CrossingDatum> data = gauss_data(sigma);
  const StrandTrace st = validate(sigma);
  std::vector<int> delta;
  for (const CrossingDatum& d : data) delta.push_back(effective_delta(d, delta_v));
  std::map<ChordClass, std::int64_t> out;
  for (std::size_t x = 0; x < data.size(); ++x)
    for (std::size_t y = x + 1; y < data.size(); ++y) {
      if (delta[x] == delta[y]) continue;
      const ChordClass c = chord_class(st, sigma.strands, static_cast<int>(x), static_cast<int>(y));
      out[c] += data[x].epsilon * data[y].epsilon;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t lannes_eval(const WeightSystem& w, const TangleWord& sigma) {
  if (!w.validated) throw Error(ErrorCode::UnvalidatedWeight, "weight system '" + w.name + "' is not validated");
  if (sigma.closed) throw Error(ErrorCode::ArityMismatch, "Lannes formula needs an open word");
  TangleWord s = sigma;
  if (!w.support.empty()) {
    if (std::any_of(w.support.begin(), w.support.end(), [&](int i) { return i < 1 || i > sigma.strands; }))
      throw Error(ErrorCode::ArityMismatch, "weight system '" + w.name + "' needs " +
                                                std::to_string(*std::max_element(w.support.begin(), w.support.end())) +
                                                " strings");
    s = sublink(sigma, w.support);
  }
  if (s.strands != w.n)
    throw Error(ErrorCode::ArityMismatch, "weight system '" + w.name + "' is for " + std::to_string(w.n) +
                                              " strings, got " + std::to_string(s.strands));
  std::int64_t twice = 0;
  for (const auto& [c, k] : lannes_coefficients(s, w.delta_v)) twice += k * w.at(c);
  if (twice % 2 != 0) throw Error(ErrorCode::Inconsistent, "odd Lannes sum for '" + w.name + "'");
  return twice / 2;
}

WeightSystem calibrate(int n, std::span<const CalibrationSample> corpus, std::vector<int> delta_candidates,
                       const std::string& name) {
  const auto cols = admissible_classes(n);
  std::map<ChordClass, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  if (delta_candidates.empty()) delta_candidates = {0, 1};

  struct Found {
    int delta_v;
    std::vector<Rational> values;
  };
  std::vector<Found> found;
  std::string failure;
  for (int dv : delta_candidates) {
    linalg::Matrix a = four_term_rows(n, cols);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (inert(cols[i])) {
        std::vector<Rational> pin(cols.size(), 0);
        pin[i] = 1;
        a.push_back(std::move(pin));
      }
    std::vector<Rational> b(a.size(), 0);
    for (const CalibrationSample& s : corpus) {
      if (s.word.strands != n) throw Error(ErrorCode::ArityMismatch, "calibration sample with wrong strand count");
      std::vector<Rational> row(cols.size(), 0);
      for (const auto& [c, k] : lannes_coefficients(s.word, dv)) {
        const auto it = index.find(c);
        if (it == index.end()) {
          // Isolated-chord classes carry weight zero by 1T.
          continue;
        }
        row[it->second] = k;
      }
      a.push_back(std::move(row));
      b.push_back(2 * s.value);
    }
    const auto sol = linalg::solve(a, b, cols.size());
    if (!sol) {
      failure += " delta_v=" + std::to_string(dv) + ": no solution;";
      continue;
    }
    std::vector<std::string> visible;
    for (const auto& k : sol->kernel) {
      std::ostringstream os;
      bool shows = false;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (k[i] == 0) continue;
        if (!inert(cols[i])) shows = true;
        os << " " << k[i].str() << "*" << cols[i].key();
      }
      if (shows) visible.push_back(os.str());
    }
    if (!visible.empty()) {
      std::string msg = name + ": weights not determined for delta_v=" + std::to_string(dv) + "; kernel:";
      for (const auto& v : visible) msg += "\n " + v;
      throw Error(ErrorCode::Underdetermined, msg);
    }
    if (!std::all_of(sol->particular.begin(), sol->particular.end(), linalg::is_integer)) {
      failure += " delta_v=" + std::to_string(dv) + ": non-integral solution;";
      continue;
    }
    found.push_back({dv, sol->particular});
  }
  if (found.empty()) throw Error(ErrorCode::Inconsistent, name + ":" + failure);
  if (found.size() > 1) {
    bool same = true;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!inert(cols[i]) && found[0].values[i] != found[1].values[i]) same = false;
    if (!same) throw Error(ErrorCode::Underdetermined, name + ": both values of delta_v fit the corpus");
  }
  WeightSystem w;
  w.name = name;
  w.n = n;
  w.delta_v = found[0].delta_v;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::int64_t v = linalg::to_int(found[0].values[i]);
    if (v != 0) w.values[cols[i]] = v;
  }
  return validated(std::move(w));
}

std::string serialize_weights(const WeightSystem& w) {
  std::ostringstream os;
  os << "name = " << w.name << "\n";
  os << "strands = " << w.n << "\n";
  if (!w.support.empty()) {
    os << "support =";
    for (int s : w.support) os << " " << s;
    os << "\n";
  }
  os << "delta_v = " << w.delta_v << "\n";
  for (const auto& [c, v] : w.values)
    if (v != 0) os << c.key() << " = " << v << "\n";
  return os.str();
}

WeightSystem parse_weights(const std::string& text) {
  WeightSystem w;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "name") {
        w.name = value;
      } else if (key == "strands") {
        w.n = std::stoi(value);
      } else if (key == "delta_v") {
        w.delta_v = std::stoi(value);
      } else if (key == "support") {
        std::istringstream vs(value);
        for (int s; vs >> s;) w.support.push_back(s);
      } else {
        w.values[ChordClass::parse(key)] = std::stoll(value);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
  }
  return validated(std::move(w));
}

// Gauss-diagram pairings ---------------------------------------------------

ArrowDiagramPattern ArrowDiagramPattern::canonical() const {
  std::vector<Chord> chords;
  for (const Arrow& a : arrows) chords.push_back({a.tail, a.head});
  // Reuse the chord re-ranking, then restore the arrow directions.
  std::vector<std::vector<int>> ranks(static_cast<std::size_t>(n) + 1);
  for (const Arrow& a : arrows) {
    ranks[static_cast<std::size_t>(a.tail.strand)].push_back(a.tail.rank);
    ranks[static_cast<std::size_t>(a.head.strand)].push_back(a.head.rank);
  }
  for (auto& r : ranks) std::sort(r.begin(), r.end());
  auto rerank = [&](ChordEnd e) {
    const auto& r = ranks[static_cast<std::size_t>(e.strand)];
    e.rank = static_cast<int>(std::lower_bound(r.begin(), r.end(), e.rank) - r.begin()) + 1;
    return e;
  };
  ArrowDiagramPattern out{n, {}, coefficient};
  for (const Arrow& a : arrows) out.arrows.push_back({rerank(a.tail), rerank(a.head), a.sign});
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

std::string ArrowDiagramPattern::key() const {
  std::ostringstream os;
  os << "n" << n << ":";
  for (const Arrow& a : arrows) {
    os << "(" << a.tail.strand << "." << a.tail.rank << ">" << a.head.strand << "." << a.head.rank;
    if (a.sign != 0) os << (a.sign > 0 ? "+" : "-");
    os << ")";
  }
  return os.str();
}

namespace {

bool matches(const ArrowDiagramPattern& pattern, const ArrowDiagramPattern& found) {
  if (pattern.arrows.size() != found.arrows.size()) return false;
  for (std::size_t i = 0; i < pattern.arrows.size(); ++i) {
    const Arrow& p = pattern.arrows[i];
    const Arrow& f = found.arrows[i];
    if (p.tail != f.tail || p.head != f.head) return false;
    if (p.sign != 0 && p.sign != f.sign) return false;
  }
  return true;
}

}  // namespace

std::int64_t gauss_pairing(std::span<const ArrowDiagramPattern> patterns, const TangleWord& sigma) {
  if (patterns.empty()) return 0;
  const StrandTrace st = validate(sigma);
  std::vector<Arrow> arrows;
  for (const CrossingRecord& c : st.crossings) {
    if (c.is_double()) throw Error(ErrorCode::SingularInput, "Gauss diagram of a singular word");
    arrows.push_back({{c.over().component + 1, c.over().rank}, {c.under().component + 1, c.under().rank}, c.sign});
  }
  std::int64_t total = 0;
  for (const ArrowDiagramPattern& raw : patterns) {
    if (raw.n != sigma.strands) throw Error(ErrorCode::ArityMismatch, "pattern strand count differs from the word");
    const ArrowDiagramPattern p = raw.canonical();
    std::int64_t count = 0;
    if (p.arrows.size() == 1) {
      for (const Arrow& a : arrows)
        if (matches(p, ArrowDiagramPattern{p.n, {a}, 1}.canonical())) count += a.sign;
    } else if (p.arrows.size() == 2) {
      for (std::size_t x = 0; x < arrows.size(); ++x)
        for (std::size_t y = x + 1; y < arrows.size(); ++y)
          if (matches(p, ArrowDiagramPattern{p.n, {arrows[x], arrows[y]}, 1}.canonical()))
            count += arrows[x].sign * arrows[y].sign;
    } else if (!p.arrows.empty()) {
      throw Error(ErrorCode::ArityMismatch, "patterns have at most two arrows");
    }
    total += p.coefficient * count;
  }
  return total;
}

std::vector<ArrowDiagramPattern> enumerate_arrow_diagrams(int n) {
  std::set<std::string> seen;
  std::vector<ArrowDiagramPattern> out;
  for (int order = 1; order <= 2; ++order)
    for (const ChordClass& c : enumerate_classes(n, order)) {
      // Each chord may point either way.
      for (int mask = 0; mask < (1 << order); ++mask) {
        ArrowDiagramPattern p{n, {}, 1};
        for (int i = 0; i < order; ++i) {
          const Chord& ch = c.chords[static_cast<std::size_t>(i)];
          if (mask & (1 << i)) p.arrows.push_back({ch.b, ch.a, 0});
          else p.arrows.push_back({ch.a, ch.b, 0});
        }
        p = p.canonical();
        if (seen.insert(p.key()).second) out.push_back(p);
      }
    }
  return out;
}

std::vector<ArrowDiagramPattern> search_pairing(int n, std::span<const CalibrationSample> corpus) {
  const auto basis = enumerate_arrow_diagrams(n);
  linalg::Matrix a;
  std::vector<Rational> b;
  for (const CalibrationSample& s : corpus) {
    std::vector<Rational> row;
    for (const ArrowDiagramPattern& p : basis) row.emplace_back(gauss_pairing(std::span(&p, 1), s.word));
    a.push_back(std::move(row));
    b.emplace_back(s.value);
  }
  const auto sol = linalg::solve(a, b, basis.size());
  if (!sol) throw Error(ErrorCode::Inconsistent, "no arrow-diagram combination fits the samples");
  std::vector<ArrowDiagramPattern> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sol->particular[i] == 0) continue;
    ArrowDiagramPattern p = basis[i];
    p.coefficient = linalg::to_int(sol->particular[i]);
    out.push_back(p);
  }
  return out;
}

}  // namespace strlink
