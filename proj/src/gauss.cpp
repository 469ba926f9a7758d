#include "strlink/gauss.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace strlink {

ChordClass ChordClass::canonical(int n, std::vector<Chord> raw) {
  // Re-rank endpoints per strand, keeping their relative order.
  std::vector<std::vector<int>> ranks(static_cast<std::size_t>(n) + 1);
  for (const Chord& c : raw) {
    for (const ChordEnd* e : {&c.a, &c.b}) {
      if (e->strand < 1 || e->strand > n)
        throw Error(ErrorCode::BadCrossingId, "chord endpoint on strand " + std::to_string(e->strand));
      ranks[static_cast<std::size_t>(e->strand)].push_back(e->rank);
    }
  }
  for (auto& r : ranks) {
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end())
      throw Error(ErrorCode::BadCrossingId, "two chord endpoints at the same point");
  }
  auto rerank = [&](ChordEnd e) {
    const auto& r = ranks[static_cast<std::size_t>(e.strand)];
    e.rank = static_cast<int>(std::lower_bound(r.begin(), r.end(), e.rank) - r.begin()) + 1;
    return e;
  };
  ChordClass out;
  out.n = n;
  for (const Chord& c : raw) {
    Chord d{rerank(c.a), rerank(c.b)};
    if (d.b < d.a) std::swap(d.a, d.b);
    out.chords.push_back(d);
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

bool ChordClass::has_isolated_chord() const {
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Chord& c = chords[i];
    if (!c.self()) continue;
    bool linked = false;
    for (std::size_t j = 0; j < chords.size() && !linked; ++j) {
      if (j == i) continue;
      int inside = 0;
      for (const ChordEnd& e : {chords[j].a, chords[j].b})
        if (e.strand == c.a.strand && e.rank > c.a.rank && e.rank < c.b.rank) ++inside;
      linked = inside == 1;
    }
    if (!linked) return true;
  }
  return false;
}

std::vector<int> ChordClass::support() const {
  std::set<int> s;
  for (const Chord& c : chords) {
    s.insert(c.a.strand);
    s.insert(c.b.strand);
  }
  return {s.begin(), s.end()};
}

std::string ChordClass::key() const {
  std::ostringstream os;
  os << "n" << n << ":";
  for (const Chord& c : chords)
    os << "(" << c.a.strand << "." << c.a.rank << "-" << c.b.strand << "." << c.b.rank << ")";
  return os.str();
}

ChordClass ChordClass::parse(const std::string& key) {
  std::istringstream is(key);
  char ch = 0;
  int n = 0;
  if (!(is >> ch) || ch != 'n' || !(is >> n) || !(is >> ch) || ch != ':' || n < 1)
    throw Error(ErrorCode::SyntaxError, "bad chord class key '" + key + "'");
  std::vector<Chord> chords;
  while (is >> ch) {
    Chord c;
    char dot1 = 0, dash = 0, dot2 = 0, close = 0;
    if (ch != '(' || !(is >> c.a.strand >> dot1 >> c.a.rank >> dash >> c.b.strand >> dot2 >> c.b.rank >> close) ||
        dot1 != '.' || dash != '-' || dot2 != '.' || close != ')')
      throw Error(ErrorCode::SyntaxError, "bad chord class key '" + key + "'");
    chords.push_back(c);
  }
  ChordClass out = canonical(n, chords);
  if (out.key() != key) throw Error(ErrorCode::SyntaxError, "chord class key '" + key + "' is not canonical");
  return out;
}

std::vector<ChordClass> enumerate_classes(int n, int order) {
  if (n < 1) throw Error(ErrorCode::ArityMismatch, "need at least one strand");
  if (order < 0 || order > 2) throw Error(ErrorCode::ArityMismatch, "chord classes are enumerated up to order 2");
  std::set<ChordClass> found;
  const int ends = 2 * order;
  // Every endpoint gets a strand and a distinct slot; canonicalization dedupes.
  std::vector<int> strand(static_cast<std::size_t>(ends), 1);
  std::vector<int> slot(static_cast<std::size_t>(ends));
  for (;;) {
    std::iota(slot.begin(), slot.end(), 0);
    do {
      std::vector<Chord> chords;
      for (int c = 0; c < order; ++c) {
        const auto e = static_cast<std::size_t>(2 * c);
        chords.push_back({{strand[e], slot[e]}, {strand[e + 1], slot[e + 1]}});
      }
      found.insert(ChordClass::canonical(n, chords));
    } while (std::next_permutation(slot.begin(), slot.end()));
    int k = 0;
    while (k < ends && strand[static_cast<std::size_t>(k)] == n) strand[static_cast<std::size_t>(k++)] = 1;
    if (k == ends) break;
    ++strand[static_cast<std::size_t>(k)];
  }
  return {found.begin(), found.end()};
}

std::vector<FourTermRelation> four_term_relations(int n) {
  std::set<std::map<ChordClass, int>> seen;
  std::vector<FourTermRelation> out;
  struct Arc {
    int strand;
    int slot;
  };
  // t_pq t_rs: the first chord sits below the second on every shared arc.
  auto product = [&](const Arc* arcs, int p, int q, int r, int s) {
    auto end = [&](int arc, int sub) {
      return ChordEnd{arcs[arc].strand, 10 * arcs[arc].slot + sub};
    };
    const int sr = (r == p || r == q) ? 1 : 0;
    const int ss = (s == p || s == q) ? 1 : 0;
    return ChordClass::canonical(n, {{end(p, 0), end(q, 0)}, {end(r, sr), end(s, ss)}});
  };
  std::vector<int> slots{0, 1, 2};
  for (int sa = 1; sa <= n; ++sa)
    for (int sb = 1; sb <= n; ++sb)
      for (int sc = 1; sc <= n; ++sc) {
        std::iota(slots.begin(), slots.end(), 0);
        do {
          const Arc arcs[3] = {{sa, slots[0]}, {sb, slots[1]}, {sc, slots[2]}};
          // [t_ab, t_ac + t_bc] = 0 with a, b, c = 0, 1, 2
          std::map<ChordClass, int> terms;
          terms[product(arcs, 0, 1, 0, 2)] += 1;
          terms[product(arcs, 0, 2, 0, 1)] -= 1;
          terms[product(arcs, 0, 1, 1, 2)] += 1;
          terms[product(arcs, 1, 2, 0, 1)] -= 1;
          std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
          if (terms.empty()) continue;
          // A relation and its negative carry the same information.
          std::map<ChordClass, int> neg = terms;
          for (auto& kv : neg) kv.second = -kv.second;
          if (seen.count(terms) || seen.count(neg)) continue;
          seen.insert(terms);
          std::ostringstream origin;
          origin << "arcs on strands " << sa << "," << sb << "," << sc << " slots " << slots[0] << slots[1]
                 << slots[2];
          out.push_back({std::move(terms), origin.str()});
        } while (std::next_permutation(slots.begin(), slots.end()));
      }
  return out;
}

std::vector<CrossingDatum> gauss_data(const TangleWord& sigma) {
  if (sigma.closed) throw Error(ErrorCode::ArityMismatch, "Gauss data needs an open word");
  if (sigma.double_point_count() > 0) throw Error(ErrorCode::SingularInput, "Gauss data of a singular word");
  const StrandTrace st = validate(sigma);
  const int n = sigma.strands;
  const StrandTrace ct = trace(curl(sigma));
  const std::size_t extra = static_cast<std::size_t>(n > 0 ? n - 1 : 0);
  std::vector<CrossingDatum> out;
  for (std::size_t x = 0; x < st.crossings.size(); ++x) {
    const CrossingRecord& c = st.crossings[x];
    const CrossingRecord& cc = ct.crossings[x + extra];
    CrossingDatum d;
    d.crossing = static_cast<int>(x);
    d.epsilon = c.sign;
    const bool slash_first = cc.slash.rank < cc.back.rank;
    d.delta_tilde = (slash_first == cc.slash_over) ? 0 : 1;
    int a = c.slash.component + 1, b = c.back.component + 1;
    if (a > b) std::swap(a, b);
    d.strings = {a, b};
    if (n == 3 && a == 1 && b == 3) d.ctype = CrossingType::Type1;
    else if (n == 3 && a == 2 && b == 3) d.ctype = CrossingType::Type2;
    out.push_back(d);
  }
  return out;
}

int effective_delta(const CrossingDatum& datum, int delta_v) {
  switch (datum.ctype) {
    case CrossingType::Type1: return delta_v;
    case CrossingType::Type2: return 1 - datum.delta_tilde;
    case CrossingType::Other: break;
  }
  return datum.delta_tilde;
}

namespace {

Chord chord_of(const CrossingRecord& c) {
  return {{c.slash.component + 1, c.slash.rank}, {c.back.component + 1, c.back.rank}};
}

}  // namespace

ChordClass chord_class(const StrandTrace& trace, int n, int x, int y) {
  const int m = static_cast<int>(trace.crossings.size());
  if (x < 0 || y < 0 || x >= m || y >= m)
    throw Error(ErrorCode::BadCrossingId, "crossing id out of range");
  if (x == y) throw Error(ErrorCode::BadCrossingId, "a crossing cannot be paired with itself");
  return ChordClass::canonical(n, {chord_of(trace.crossings[static_cast<std::size_t>(x)]),
                                   chord_of(trace.crossings[static_cast<std::size_t>(y)])});
}

ChordClass chord_class(const TangleWord& sigma, int x, int y) {
  return chord_class(validate(sigma), sigma.strands, x, y);
}

ChordClass singular_class(const TangleWord& sigma) {
  const StrandTrace st = validate(sigma);
  std::vector<Chord> chords;
  for (const CrossingRecord& c : st.crossings)
    if (c.is_double()) chords.push_back(chord_of(c));
  if (chords.size() > 2) throw Error(ErrorCode::ArityMismatch, "more than two double points");
  return ChordClass::canonical(sigma.strands, chords);
}

}  // namespace strlink
