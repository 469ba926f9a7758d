#include "strlink/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "strlink/fixtures.hpp"

namespace strlink {

namespace {

using Events = std::vector<GeoEvent>;

GeoEvent cross(int p, bool f) { return {GeoKind::Cross, p, f}; }
GeoEvent cup(int p) { return {GeoKind::Cup, p, false}; }
GeoEvent cap(int p) { return {GeoKind::Cap, p, false}; }

bool is(const GeoEvent& e, GeoKind k, int p) { return e.kind == k && e.position == p; }

int delta(const GeoEvent& e) {
  if (e.kind == GeoKind::Cup) return 2;
  if (e.kind == GeoKind::Cap) return -2;
  return 0;
}

std::vector<int> counts(const GeoWord& g) {
  std::vector<int> c{g.strands};
  for (const GeoEvent& e : g.events) c.push_back(c.back() + delta(e));
  return c;
}

int crossings(const GeoWord& g) {
  return static_cast<int>(std::count_if(g.events.begin(), g.events.end(),
                                        [](const GeoEvent& e) { return e.kind == GeoKind::Cross; }));
}

// Span of an event in doubled coordinates (point k -> 2k, gap before k -> 2k-1),
// measured on the level between the two events being commuted.
std::pair<int, int> upper_span(const GeoEvent& e) {
  if (e.kind == GeoKind::Cap) return {2 * e.position - 1, 2 * e.position - 1};
  return {2 * e.position, 2 * e.position + 2};
}
std::pair<int, int> lower_span(const GeoEvent& e) {
  if (e.kind == GeoKind::Cup) return {2 * e.position - 1, 2 * e.position - 1};
  return {2 * e.position, 2 * e.position + 2};
}

class Mutator {
 public:
  Mutator(GeoWord g, std::uint64_t seed, int cap) : g_(std::move(g)), rng_(seed), cap_(cap) {}

  void run(int count) {
    const std::vector<std::function<bool()>> moves = {
        [this] { return r2_insert(); }, [this] { return r2_delete(); },  [this] { return r1_insert(); },
        [this] { return r1_delete(); }, [this] { return zigzag_insert(); }, [this] { return zigzag_delete(); },
        [this] { return commute(); },   [this] { return r3(); },         [this] { return slide(); },
        [this] { return commute(); },   [this] { return r3(); },         [this] { return slide(); }};
    for (int done = 0, tries = 0; done < count && tries < 200 * (count + 1); ++tries)
      if (moves[static_cast<std::size_t>(rng_.below(static_cast<int>(moves.size())))]()) ++done;
  }

  const GeoWord& word() const { return g_; }

 private:
  Events& ev() { return g_.events; }
  int size() const { return static_cast<int>(g_.events.size()); }

  void replace(int at, int len, const Events& with) {
    ev().erase(ev().begin() + at, ev().begin() + at + len);
    ev().insert(ev().begin() + at, with.begin(), with.end());
  }

  // Random index i such that pred(i) holds, or -1.
  int find(int limit, const std::function<bool(int)>& pred) {
    std::vector<int> hits;
    for (int i = 0; i < limit; ++i)
      if (pred(i)) hits.push_back(i);
    if (hits.empty()) return -1;
    return hits[static_cast<std::size_t>(rng_.below(static_cast<int>(hits.size())))];
  }

  bool room(int added) const { return crossings(g_) + added <= cap_; }

  bool r2_insert() {
    if (!room(2)) return false;
    const auto c = counts(g_);
    const int b = rng_.below(size() + 1);
    if (c[static_cast<std::size_t>(b)] < 2) return false;
    const int p = rng_.between(1, c[static_cast<std::size_t>(b)] - 1);
    const bool f = rng_.coin();
    replace(b, 0, {cross(p, f), cross(p, !f)});
    return true;
  }

  bool r2_delete() {
    const int i = find(size() - 1, [&](int k) {
      const GeoEvent& a = ev()[static_cast<std::size_t>(k)];
      const GeoEvent& b = ev()[static_cast<std::size_t>(k) + 1];
      return a.kind == GeoKind::Cross && is(b, GeoKind::Cross, a.position) && a.slash_over != b.slash_over;
    });
    if (i < 0) return false;
    replace(i, 2, {});
    return true;
  }

  bool r1_insert() {
    if (!room(1)) return false;
    const bool f = rng_.coin();
    switch (rng_.below(4)) {
      case 0:
      case 1: {
        const auto c = counts(g_);
        const int b = rng_.below(size() + 1);
        const int m = c[static_cast<std::size_t>(b)];
        if (m < 1) return false;
        const int p = rng_.between(1, m);
        if (rng_.coin()) replace(b, 0, {cup(p + 1), cross(p, f), cap(p + 1)});
        else replace(b, 0, {cup(p), cross(p + 1, f), cap(p)});
        return true;
      }
      case 2: {
        const int i = find(size(), [&](int k) { return ev()[static_cast<std::size_t>(k)].kind == GeoKind::Cup; });
        if (i < 0) return false;
        replace(i + 1, 0, {cross(ev()[static_cast<std::size_t>(i)].position, f)});
        return true;
      }
      default: {
        const int i = find(size(), [&](int k) { return ev()[static_cast<std::size_t>(k)].kind == GeoKind::Cap; });
        if (i < 0) return false;
        replace(i, 0, {cross(ev()[static_cast<std::size_t>(i)].position, f)});
        return true;
      }
    }
  }

  bool r1_delete() {
    auto at = [&](int k) -> const GeoEvent& { return ev()[static_cast<std::size_t>(k)]; };
    const int i3 = find(size() - 2, [&](int k) {
      const int p = at(k + 1).position;
      if (at(k + 1).kind != GeoKind::Cross) return false;
      return (is(at(k), GeoKind::Cup, p + 1) && is(at(k + 2), GeoKind::Cap, p + 1)) ||
             (is(at(k), GeoKind::Cup, p - 1) && is(at(k + 2), GeoKind::Cap, p - 1));
    });
    if (i3 >= 0 && rng_.coin()) {
      replace(i3, 3, {});
      return true;
    }
    const int i2 = find(size() - 1, [&](int k) {
      const GeoEvent& a = at(k);
      const GeoEvent& b = at(k + 1);
      return (a.kind == GeoKind::Cup && is(b, GeoKind::Cross, a.position)) ||
             (a.kind == GeoKind::Cross && is(b, GeoKind::Cap, a.position));
    });
    if (i2 < 0) return false;
    const int drop = at(i2).kind == GeoKind::Cross ? i2 : i2 + 1;
    replace(drop, 1, {});
    return true;
  }

  bool zigzag_insert() {
    const auto c = counts(g_);
    const int b = rng_.below(size() + 1);
    const int m = c[static_cast<std::size_t>(b)];
    if (m < 1) return false;
    const int p = rng_.between(1, m);
    if (rng_.coin()) replace(b, 0, {cup(p + 1), cap(p)});
    else replace(b, 0, {cup(p), cap(p + 1)});
    return true;
  }

  bool zigzag_delete() {
    const int i = find(size() - 1, [&](int k) {
      const GeoEvent& a = ev()[static_cast<std::size_t>(k)];
      const GeoEvent& b = ev()[static_cast<std::size_t>(k) + 1];
      return a.kind == GeoKind::Cup &&
             (is(b, GeoKind::Cap, a.position + 1) || is(b, GeoKind::Cap, a.position - 1));
    });
    if (i < 0) return false;
    replace(i, 2, {});
    return true;
  }

  bool commute() {
    if (size() < 2) return false;
    const int i = rng_.below(size() - 1);
    GeoEvent lo = ev()[static_cast<std::size_t>(i)];
    GeoEvent hi = ev()[static_cast<std::size_t>(i) + 1];
    const auto [l1, r1] = upper_span(lo);
    const auto [l2, r2] = lower_span(hi);
    GeoEvent new_lo = hi, new_hi = lo;
    if (r2 < l1) {
      new_hi.position = lo.position + delta(hi);
    } else if (l2 > r1) {
      new_lo.position = hi.position - delta(lo);
    } else {
      return false;
    }
    replace(i, 2, {new_lo, new_hi});
    return true;
  }

  bool r3() {
    auto at = [&](int k) -> const GeoEvent& { return ev()[static_cast<std::size_t>(k)]; };
    const int i = find(size() - 2, [&](int k) {
      const GeoEvent &a = at(k), &b = at(k + 1), &c = at(k + 2);
      if (a.kind != GeoKind::Cross || b.kind != GeoKind::Cross || c.kind != GeoKind::Cross) return false;
      if (c.position != a.position || (b.position != a.position + 1 && b.position != a.position - 1))
        return false;
      // The three over/under choices must be realizable by a height order.
      return !(a.slash_over == c.slash_over && b.slash_over != a.slash_over);
    });
    if (i < 0) return false;
    const GeoEvent a = at(i), b = at(i + 1), c = at(i + 2);
    replace(i, 3, {cross(b.position, c.slash_over), cross(a.position, b.slash_over), cross(b.position, a.slash_over)});
    return true;
  }

  bool slide() {
    auto at = [&](int k) -> const GeoEvent& { return ev()[static_cast<std::size_t>(k)]; };
    const int i = find(size() - 1, [&](int k) {
      const GeoEvent &a = at(k), &b = at(k + 1);
      if (a.kind == GeoKind::Cup && b.kind == GeoKind::Cross)
        return b.position == a.position + 1 || b.position == a.position - 1;
      if (a.kind == GeoKind::Cross && b.kind == GeoKind::Cap)
        return b.position == a.position + 1 || b.position == a.position - 1;
      return false;
    });
    if (i < 0) return false;
    const GeoEvent a = at(i), b = at(i + 1);
    if (a.kind == GeoKind::Cup) replace(i, 2, {cup(b.position), cross(a.position, !b.slash_over)});
    else replace(i, 2, {cross(b.position, !a.slash_over), cap(a.position)});
    return true;
  }

  GeoWord g_;
  Rng rng_;
  int cap_;
};

}  // namespace

TangleWord mutate(const TangleWord& sigma, std::uint64_t seed, int count, MoveOptions options) {
  if (sigma.double_point_count() > 0) throw Error(ErrorCode::SingularInput, "mutate needs a non-singular word");
  if (count <= 0) return sigma;
  const int cap = options.max_crossings >= 0 ? options.max_crossings : sigma.crossing_count() + 4;
  Mutator m(to_geometric(sigma), seed, std::max(cap, sigma.crossing_count()));
  m.run(count);
  return from_geometric(m.word());
}

namespace {

struct Path {
  bool rooted = false;
};

class Builder {
 public:
  Builder(Rng& rng, int n) : rng_(rng) {
    g_.strands = n;
    for (int s = 0; s < n; ++s) {
      points_.push_back(s);
      paths_.push_back({true});
    }
  }

  int crossings() const { return crossings_; }
  int width() const { return static_cast<int>(points_.size()); }

  void do_cross(int p) {
    std::swap(points_[static_cast<std::size_t>(p - 1)], points_[static_cast<std::size_t>(p)]);
    g_.events.push_back(cross(p, rng_.coin()));
    ++crossings_;
  }

  // A local trefoil (random handedness) tied into the path at position p.
  void do_knot(int p) {
    const bool over = rng_.coin();
    do_cup(p);
    for (int k = 0; k < 3; ++k) {
      std::swap(points_[static_cast<std::size_t>(p)], points_[static_cast<std::size_t>(p + 1)]);
      g_.events.push_back(cross(p + 1, over));
      ++crossings_;
    }
    do_cap(p);
  }

  // A Whitehead-type clasp between the points at p and p + 1.
  void do_clasp(int p) {
    static const std::vector<GeoWord> gadgets = [] {
      std::vector<GeoWord> g;
      for (const TangleWord& w : {fixtures::whitehead(), fixtures::whitehead_figure_eight()}) {
        g.push_back(to_geometric(w));
        g.push_back(to_geometric(mirror(w)));
        g.push_back(to_geometric(reverse_strings(w)));
      }
      return g;
    }();
    const GeoWord& gadget = gadgets[static_cast<std::size_t>(rng_.below(static_cast<int>(gadgets.size())))];
    for (GeoEvent e : gadget.events) {
      e.position += p - 1;
      g_.events.push_back(e);
      if (e.kind == GeoKind::Cross) ++crossings_;
    }
  }

  void do_cup(int p) {
    const int id = static_cast<int>(paths_.size());
    paths_.push_back({false});
    points_.insert(points_.begin() + (p - 1), {id, id});
    g_.events.push_back(cup(p));
  }

  // Joining two ends of one path would close a loop, and joining two rooted
  // ends would send a string back to the bottom.
  bool cap_allowed(int p) const {
    const int a = points_[static_cast<std::size_t>(p - 1)], b = points_[static_cast<std::size_t>(p)];
    return a != b && !(paths_[static_cast<std::size_t>(a)].rooted && paths_[static_cast<std::size_t>(b)].rooted);
  }

  void do_cap(int p) {
    int a = points_[static_cast<std::size_t>(p - 1)], b = points_[static_cast<std::size_t>(p)];
    if (paths_[static_cast<std::size_t>(b)].rooted) std::swap(a, b);
    points_.erase(points_.begin() + (p - 1), points_.begin() + (p + 1));
    std::replace(points_.begin(), points_.end(), b, a);
    g_.events.push_back(cap(p));
  }

  void finish() {
    // While a free point remains, some adjacent pair can be capped: the last
    // free point has a rooted right neighbour, or its path's other end sits
    // just left of it with a different path beyond.
    for (;;) {
      int legal = -1;
      for (int p = 1; p < width() && legal < 0; ++p)
        if (cap_allowed(p)) legal = p;
      if (legal < 0) break;
      do_cap(legal);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int p = 1; p < width(); ++p)
        if (points_[static_cast<std::size_t>(p - 1)] > points_[static_cast<std::size_t>(p)]) {
          do_cross(p);
          changed = true;
        }
    }
  }

  const GeoWord& word() const { return g_; }

 private:
  Rng& rng_;
  GeoWord g_;
  std::vector<int> points_;  // path id at each active position
  std::vector<Path> paths_;
  int crossings_ = 0;
};

}  // namespace

TangleWord random_string_link(Rng& rng, const GeneratorOptions& options) {
  const int n = options.strands;
  if (n < 1) throw Error(ErrorCode::ArityMismatch, "need at least one strand");
  for (;;) {
    const int target = rng.between(options.min_crossings, std::max(options.min_crossings, options.max_crossings));
    Builder b(rng, n);
    while (b.crossings() < target) {
      const int roll = rng.below(100);
      const int w = b.width();
      if (roll < 18 && w < n + 2 * options.max_extra_points) {
        b.do_cup(rng.between(1, w + 1));
      } else if (roll < 36 && w >= 2) {
        const int p = rng.between(1, w - 1);
        if (b.cap_allowed(p)) b.do_cap(p);
      } else if (roll < 42 && b.crossings() + 3 <= target) {
        b.do_knot(rng.between(1, w));
      } else if (roll < 48 && w >= 2 && b.crossings() + 7 <= target) {
        b.do_clasp(rng.between(1, w - 1));
      } else if (w >= 2) {
        b.do_cross(rng.between(1, w - 1));
      } else {
        b.do_cup(rng.between(1, w + 1));
      }
    }
    b.finish();
    if (b.crossings() < options.min_crossings || b.crossings() > options.max_crossings) continue;
    TangleWord w = from_geometric(b.word());
    validate(w);
    return w;
  }
}

TangleWord random_singular(Rng& rng, const GeneratorOptions& options, int doubles) {
  GeneratorOptions o = options;
  o.min_crossings = std::max(o.min_crossings, doubles);
  o.max_crossings = std::max(o.max_crossings, o.min_crossings);
  TangleWord w = random_string_link(rng, o);
  std::vector<int> ids(static_cast<std::size_t>(w.crossing_count()));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  for (int k = 0; k < doubles; ++k) {
    const int j = k + rng.below(static_cast<int>(ids.size()) - k);
    std::swap(ids[static_cast<std::size_t>(k)], ids[static_cast<std::size_t>(j)]);
    w = make_double(w, ids[static_cast<std::size_t>(k)]);
  }
  return w;
}

}  // namespace strlink
