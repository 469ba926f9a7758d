#include "strlink/tangle.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace strlink {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::NotAStringLink: return "NotAStringLink";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::BadCrossingId: return "BadCrossingId";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::UnvalidatedWeight: return "UnvalidatedWeight";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::BadColor: return "BadColor";
    case ErrorCode::NotInSL2: return "NotInSL2";
  }
  return "Unknown";
}

TangleWord TangleWord::identity(int n) {
  TangleWord w;
  w.strands = n;
  return w;
}

int TangleWord::crossing_count() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const TangleEvent& e) { return e.is_crossing(); }));
}

int TangleWord::double_point_count() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const TangleEvent& e) {
    return e.kind == EventKind::CrossDouble;
  }));
}

std::vector<std::size_t> TangleWord::crossing_events() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].is_crossing()) out.push_back(i);
  return out;
}

namespace {

std::string event_context(std::size_t index) {
  std::ostringstream os;
  os << "event " << (index + 1);
  return os.str();
}

// Active point counts per level; level b sits below event b.
std::vector<int> level_counts(const TangleWord& w) {
  std::vector<int> counts;
  counts.reserve(w.events.size() + 1);
  int count = w.strands;
  counts.push_back(count);
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    const TangleEvent& e = w.events[i];
    const int p = e.position;
    if (e.is_crossing()) {
      if (p < 1 || p + 1 > count)
        throw Error(ErrorCode::MalformedWord, event_context(i) + ": crossing position out of range");
    } else if (e.kind == EventKind::Cup) {
      if (p < 1 || p > count + 1)
        throw Error(ErrorCode::MalformedWord, event_context(i) + ": cup position out of range");
      count += 2;
    } else {
      if (p < 1 || p + 1 > count)
        throw Error(ErrorCode::MalformedWord, event_context(i) + ": cap position out of range");
      count -= 2;
    }
    counts.push_back(count);
  }
  return counts;
}

struct RawVisit {
  std::size_t event;
  bool slash;
  int dir;
};

enum class EndKind { Bottom, Top, Loop };

struct RawComponent {
  EndKind start_kind = EndKind::Bottom;
  int start_pos = 0;
  EndKind end_kind = EndKind::Bottom;
  int end_pos = 0;
  std::vector<RawVisit> visits;
};

class Tracer {
 public:
  explicit Tracer(const TangleWord& w) : w_(w), counts_(level_counts(w)) {
    seen_.resize(counts_.size());
    for (std::size_t b = 0; b < counts_.size(); ++b)
      seen_[b].assign(static_cast<std::size_t>(counts_[b]) + 1, -1);
  }

  bool seen(int level, int pos) const {
    return seen_[static_cast<std::size_t>(level)][static_cast<std::size_t>(pos)] >= 0;
  }
  int component_at(int level, int pos) const {
    return seen_[static_cast<std::size_t>(level)][static_cast<std::size_t>(pos)];
  }
  const std::vector<int>& counts() const { return counts_; }

  RawComponent walk(int comp, int level, int pos, int dir, bool loop) {
    RawComponent rc;
    const int top = static_cast<int>(w_.events.size());
    const auto start = std::make_tuple(level, pos, dir);
    int b = level, p = pos, d = dir;
    rc.start_pos = pos;
    rc.start_kind = loop ? EndKind::Loop : (dir > 0 ? EndKind::Bottom : EndKind::Top);
    while (true) {
      seen_[static_cast<std::size_t>(b)][static_cast<std::size_t>(p)] = comp;
      if (d > 0) {
        if (b == top) {
          rc.end_kind = EndKind::Top;
          rc.end_pos = p;
          break;
        }
        const std::size_t ev = static_cast<std::size_t>(b);
        const TangleEvent& e = w_.events[ev];
        const int q = e.position;
        if (e.is_crossing()) {
          if (p == q) {
            rc.visits.push_back({ev, true, +1});
            p = q + 1;
          } else if (p == q + 1) {
            rc.visits.push_back({ev, false, +1});
            p = q;
          }
          ++b;
        } else if (e.kind == EventKind::Cup) {
          if (p >= q) p += 2;
          ++b;
        } else {
          if (p == q) {
            p = q + 1;
            d = -1;
          } else if (p == q + 1) {
            p = q;
            d = -1;
          } else {
            if (p > q + 1) p -= 2;
            ++b;
          }
        }
      } else {
        if (b == 0) {
          rc.end_kind = EndKind::Bottom;
          rc.end_pos = p;
          break;
        }
        const std::size_t ev = static_cast<std::size_t>(b - 1);
        const TangleEvent& e = w_.events[ev];
        const int q = e.position;
        if (e.is_crossing()) {
          if (p == q) {
            rc.visits.push_back({ev, false, -1});
            p = q + 1;
          } else if (p == q + 1) {
            rc.visits.push_back({ev, true, -1});
            p = q;
          }
          --b;
        } else if (e.kind == EventKind::Cup) {
          if (p == q) {
            p = q + 1;
            d = +1;
          } else if (p == q + 1) {
            p = q;
            d = +1;
          } else {
            if (p > q + 1) p -= 2;
            --b;
          }
        } else {
          if (p >= q) p += 2;
          --b;
        }
      }
      if (loop && std::make_tuple(b, p, d) == start) {
        rc.end_kind = EndKind::Loop;
        break;
      }
    }
    return rc;
  }

 private:
  const TangleWord& w_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> seen_;
};

struct FullTrace {
  StrandTrace trace;
  std::vector<RawComponent> raw;
  std::vector<std::vector<int>> slot_component;  // [level][pos], 1-based pos
};

FullTrace trace_full(const TangleWord& w) {
  if (w.closed && w.strands != 0)
    throw Error(ErrorCode::MalformedWord, "closed words start from zero strands");
  Tracer tracer(w);
  const auto& counts = tracer.counts();
  const int top = static_cast<int>(w.events.size());
  if (counts.back() != (w.closed ? 0 : w.strands))
    throw Error(ErrorCode::MalformedWord, "top point count differs from bottom point count");

  FullTrace ft;
  int comp = 0;
  for (int k = 1; k <= counts.front(); ++k)
    if (!tracer.seen(0, k)) ft.raw.push_back(tracer.walk(comp++, 0, k, +1, false));
  for (int k = 1; k <= counts.back(); ++k)
    if (!tracer.seen(top, k)) ft.raw.push_back(tracer.walk(comp++, top, k, -1, false));
  for (int b = 0; b < top; ++b) {
    const TangleEvent& e = w.events[static_cast<std::size_t>(b)];
    if (e.kind == EventKind::Cup && !tracer.seen(b + 1, e.position))
      ft.raw.push_back(tracer.walk(comp++, b + 1, e.position, +1, true));
  }

  StrandTrace& st = ft.trace;
  st.components = comp;
  st.visits.resize(static_cast<std::size_t>(comp));
  std::vector<int> crossing_of_event(w.events.size(), -1);
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    const TangleEvent& e = w.events[i];
    if (!e.is_crossing()) continue;
    if (e.kind == EventKind::CrossDouble && !w.singular)
      throw Error(ErrorCode::MalformedWord,
                  event_context(i) + ": double point in a word not flagged singular");
    crossing_of_event[i] = static_cast<int>(st.crossings.size());
    CrossingRecord rec;
    rec.event = i;
    rec.sign = e.kind == EventKind::CrossPos ? 1 : e.kind == EventKind::CrossNeg ? -1 : 0;
    st.crossings.push_back(rec);
  }
  for (int c = 0; c < comp; ++c) {
    const RawComponent& rc = ft.raw[static_cast<std::size_t>(c)];
    auto& list = st.visits[static_cast<std::size_t>(c)];
    for (const RawVisit& v : rc.visits) {
      const int x = crossing_of_event[v.event];
      CrossingRecord& rec = st.crossings[static_cast<std::size_t>(x)];
      BranchRef ref{c, static_cast<int>(list.size()), v.dir};
      (v.slash ? rec.slash : rec.back) = ref;
      list.push_back({x, v.slash});
    }
  }
  for (CrossingRecord& rec : st.crossings)
    rec.slash_over = rec.sign != 0 && rec.sign * rec.slash.direction * rec.back.direction == 1;

  ft.slot_component.resize(counts.size());
  for (std::size_t b = 0; b < counts.size(); ++b) {
    auto& row = ft.slot_component[b];
    row.assign(static_cast<std::size_t>(counts[b]) + 1, -1);
    for (int p = 1; p <= counts[b]; ++p)
      row[static_cast<std::size_t>(p)] = tracer.component_at(static_cast<int>(b), p);
  }
  return ft;
}

void require_open(const TangleWord& w, const char* op) {
  if (w.closed) throw Error(ErrorCode::ArityMismatch, std::string(op) + " needs an open word");
}

std::size_t crossing_event_index(const TangleWord& w, int crossing_id) {
  const auto events = w.crossing_events();
  if (crossing_id < 0 || static_cast<std::size_t>(crossing_id) >= events.size())
    throw Error(ErrorCode::BadCrossingId, "crossing id " + std::to_string(crossing_id));
  return events[static_cast<std::size_t>(crossing_id)];
}

GeoEvent geo_cross(int position, bool slash_over) { return {GeoKind::Cross, position, slash_over}; }
GeoEvent geo_cup(int position) { return {GeoKind::Cup, position, false}; }
GeoEvent geo_cap(int position) { return {GeoKind::Cap, position, false}; }

void append_shifted(std::vector<GeoEvent>& out, const std::vector<GeoEvent>& in, int offset) {
  for (GeoEvent e : in) {
    e.position += offset;
    out.push_back(e);
  }
}

}  // namespace

void check_levels(const TangleWord& word) {
  if (word.closed && word.strands != 0)
    throw Error(ErrorCode::MalformedWord, "closed words start from zero strands");
  const auto counts = level_counts(word);
  if (counts.back() != (word.closed ? 0 : word.strands))
    throw Error(ErrorCode::MalformedWord, "top point count differs from bottom point count");
}

StrandTrace trace(const TangleWord& word) { return trace_full(word).trace; }

StrandTrace validate(const TangleWord& word) {
  FullTrace ft = trace_full(word);
  if (word.closed) return std::move(ft.trace);
  for (std::size_t c = 0; c < ft.raw.size(); ++c) {
    const RawComponent& rc = ft.raw[c];
    if (rc.start_kind == EndKind::Loop)
      throw Error(ErrorCode::NotAStringLink, "diagram has a closed component");
    if (rc.start_kind != EndKind::Bottom || rc.end_kind != EndKind::Top)
      throw Error(ErrorCode::NotAStringLink,
                  "string " + std::to_string(c + 1) + " does not run from bottom to top");
    if (rc.start_pos != static_cast<int>(c) + 1 || rc.end_pos != rc.start_pos)
      throw Error(ErrorCode::NotAStringLink, "string starting at bottom position " +
                                                 std::to_string(rc.start_pos) +
                                                 " exits at top position " +
                                                 std::to_string(rc.end_pos));
  }
  return std::move(ft.trace);
}

GeoWord to_geometric(const TangleWord& word) {
  const StrandTrace st = trace(word);
  GeoWord geo;
  geo.strands = word.strands;
  geo.closed = word.closed;
  geo.events.reserve(word.events.size());
  std::size_t x = 0;
  for (const TangleEvent& e : word.events) {
    GeoEvent g;
    g.position = e.position;
    if (e.kind == EventKind::Cup) {
      g.kind = GeoKind::Cup;
    } else if (e.kind == EventKind::Cap) {
      g.kind = GeoKind::Cap;
    } else {
      g.kind = e.kind == EventKind::CrossDouble ? GeoKind::Double : GeoKind::Cross;
      g.slash_over = st.crossings[x++].slash_over;
    }
    geo.events.push_back(g);
  }
  return geo;
}

TangleWord from_geometric(const GeoWord& geo) {
  TangleWord w;
  w.strands = geo.strands;
  w.closed = geo.closed;
  for (const GeoEvent& g : geo.events) {
    TangleEvent e;
    e.position = g.position;
    switch (g.kind) {
      case GeoKind::Cup: e.kind = EventKind::Cup; break;
      case GeoKind::Cap: e.kind = EventKind::Cap; break;
      case GeoKind::Double:
        e.kind = EventKind::CrossDouble;
        w.singular = true;
        break;
      case GeoKind::Cross: e.kind = EventKind::CrossPos; break;
    }
    w.events.push_back(e);
  }
  const StrandTrace st = trace(w);
  std::size_t x = 0;
  for (std::size_t i = 0; i < geo.events.size(); ++i) {
    const GeoEvent& g = geo.events[i];
    if (g.kind != GeoKind::Cross && g.kind != GeoKind::Double) continue;
    const CrossingRecord& rec = st.crossings[x++];
    if (g.kind == GeoKind::Double) continue;
    const int orient = rec.slash.direction * rec.back.direction;
    const int sign = g.slash_over ? orient : -orient;
    w.events[i].kind = sign > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
  }
  return w;
}

TangleWord stack(const TangleWord& lower, const TangleWord& upper) {
  require_open(lower, "stack");
  require_open(upper, "stack");
  if (lower.strands != upper.strands)
    throw Error(ErrorCode::ArityMismatch, "stack of words with different strand counts");
  TangleWord out = lower;
  out.events.insert(out.events.end(), upper.events.begin(), upper.events.end());
  out.singular = lower.singular || upper.singular;
  return out;
}

TangleWord close(const TangleWord& sigma) {
  require_open(sigma, "close");
  const GeoWord g = to_geometric(sigma);
  GeoWord out;
  out.closed = true;
  const int n = sigma.strands;
  for (int i = 1; i <= n; ++i) out.events.push_back(geo_cup(i));
  append_shifted(out.events, g.events, 0);
  for (int i = n; i >= 1; --i) out.events.push_back(geo_cap(i));
  return from_geometric(out);
}

TangleWord plat_close(const TangleWord& sigma) {
  require_open(sigma, "plat_close");
  if (sigma.strands != 2) throw Error(ErrorCode::ArityMismatch, "plat closure needs 2 strands");
  const GeoWord g = to_geometric(sigma);
  GeoWord out;
  out.closed = true;
  out.events.push_back(geo_cup(1));
  append_shifted(out.events, g.events, 0);
  out.events.push_back(geo_cap(1));
  return from_geometric(out);
}

TangleWord curl(const TangleWord& sigma) {
  require_open(sigma, "curl");
  const int n = sigma.strands;
  if (n <= 1) return sigma;
  const GeoWord g = to_geometric(sigma);
  GeoWord out;
  out.strands = 1;
  // Connecting arc i leaves the top of string i, runs down the far left and
  // comes back under the diagram, passing over the downward extension of the
  // first string before entering string i+1. Deeper arcs belong to later i.
  for (int i = n - 1; i >= 1; --i) {
    out.events.push_back(geo_cup(n - i));
    out.events.push_back(geo_cross(n - i + 1, true));
  }
  append_shifted(out.events, g.events, n - 1);
  for (int i = n - 1; i >= 1; --i) out.events.push_back(geo_cap(i));
  return from_geometric(out);
}

TangleWord tilde(const TangleWord& sigma, int sign) {
  require_open(sigma, "tilde");
  if (sigma.strands != 3) throw Error(ErrorCode::ArityMismatch, "tilde needs a 3-string link");
  if (sigma.singular) throw Error(ErrorCode::SingularInput, "tilde of a singular word");
  const GeoWord g = to_geometric(sigma);
  GeoWord out;
  out.strands = 2;
  out.events.push_back(geo_cup(1));  // return arc of string 1, on the far left
  append_shifted(out.events, g.events, 1);
  // Points are now [return, s1, s2, s3]; s3 and then s1 pass over s2, and the
  // two outer strings cross each other above it.
  out.events.push_back(geo_cross(3, false));
  out.events.push_back(geo_cross(2, sign > 0));
  out.events.push_back(geo_cross(3, true));
  out.events.push_back(geo_cap(1));
  return from_geometric(out);
}

TangleWord sublink(const TangleWord& sigma, std::span<const int> keep) {
  require_open(sigma, "sublink");
  if (keep.empty()) throw Error(ErrorCode::EmptySelection, "sublink of no strings");
  std::vector<int> sel(keep.begin(), keep.end());
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  if (sel.front() < 1 || sel.back() > sigma.strands)
    throw Error(ErrorCode::ArityMismatch, "sublink selection outside 1.." + std::to_string(sigma.strands));
  validate(sigma);
  const FullTrace ft = trace_full(sigma);
  std::vector<char> kept(static_cast<std::size_t>(ft.trace.components), 0);
  for (int s : sel) kept[static_cast<std::size_t>(s - 1)] = 1;

  auto kept_slot = [&](std::size_t level, int pos) {
    return kept[static_cast<std::size_t>(ft.slot_component[level][static_cast<std::size_t>(pos)])] != 0;
  };
  auto new_pos = [&](std::size_t level, int pos) {
    int count = 0;
    for (int p = 1; p < pos; ++p)
      if (kept_slot(level, p)) ++count;
    return count + 1;
  };

  TangleWord out;
  out.strands = static_cast<int>(sel.size());
  for (std::size_t b = 0; b < sigma.events.size(); ++b) {
    const TangleEvent& e = sigma.events[b];
    const int q = e.position;
    if (e.is_crossing()) {
      const bool a = kept_slot(b, q), c = kept_slot(b, q + 1);
      if (a && c) {
        out.events.push_back({e.kind, new_pos(b, q)});
        if (e.kind == EventKind::CrossDouble) out.singular = true;
      } else if (e.kind == EventKind::CrossDouble) {
        throw Error(ErrorCode::EmptySelection, "double point touches a removed string");
      }
    } else if (e.kind == EventKind::Cup) {
      if (kept_slot(b + 1, q)) out.events.push_back({e.kind, new_pos(b + 1, q)});
    } else {
      if (kept_slot(b, q)) out.events.push_back({e.kind, new_pos(b, q)});
    }
  }
  return out;
}

TangleWord switch_crossing(const TangleWord& sigma, int crossing_id) {
  TangleWord out = sigma;
  TangleEvent& e = out.events[crossing_event_index(sigma, crossing_id)];
  if (e.kind == EventKind::CrossDouble)
    throw Error(ErrorCode::BadCrossingId, "cannot switch a double point");
  e.kind = e.kind == EventKind::CrossPos ? EventKind::CrossNeg : EventKind::CrossPos;
  return out;
}

TangleWord smooth(const TangleWord& sigma, int crossing_id) {
  const std::size_t ev = crossing_event_index(sigma, crossing_id);
  const StrandTrace st = trace(sigma);
  const CrossingRecord& rec = st.crossings[static_cast<std::size_t>(crossing_id)];
  if (rec.is_double()) throw Error(ErrorCode::BadCrossingId, "cannot smooth a double point");
  GeoWord g = to_geometric(sigma);
  const int q = g.events[ev].position;
  std::vector<GeoEvent> repl;
  if (rec.slash.direction != rec.back.direction) {
    repl.push_back(geo_cap(q));
    repl.push_back(geo_cup(q));
  }
  g.events.erase(g.events.begin() + static_cast<std::ptrdiff_t>(ev));
  g.events.insert(g.events.begin() + static_cast<std::ptrdiff_t>(ev), repl.begin(), repl.end());
  return from_geometric(g);
}

TangleWord make_double(const TangleWord& sigma, int crossing_id) {
  TangleWord out = sigma;
  out.events[crossing_event_index(sigma, crossing_id)].kind = EventKind::CrossDouble;
  out.singular = true;
  return out;
}

TangleWord resolve_double(const TangleWord& sigma, int crossing_id, int sign) {
  TangleWord out = sigma;
  TangleEvent& e = out.events[crossing_event_index(sigma, crossing_id)];
  if (e.kind != EventKind::CrossDouble)
    throw Error(ErrorCode::BadCrossingId, "crossing " + std::to_string(crossing_id) + " is not a double point");
  e.kind = sign > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
  out.singular = out.double_point_count() > 0;
  return out;
}

TangleWord mirror(const TangleWord& sigma) {
  TangleWord out = sigma;
  for (TangleEvent& e : out.events) {
    if (e.kind == EventKind::CrossPos)
      e.kind = EventKind::CrossNeg;
    else if (e.kind == EventKind::CrossNeg)
      e.kind = EventKind::CrossPos;
  }
  return out;
}

TangleWord reverse_strings(const TangleWord& sigma) {
  require_open(sigma, "reverse_strings");
  const GeoWord g = to_geometric(sigma);
  GeoWord out;
  out.strands = g.strands;
  // Reflecting left to right and front to back keeps the slash branch over.
  int width = g.strands;
  for (const GeoEvent& e : g.events) {
    GeoEvent r = e;
    switch (e.kind) {
      case GeoKind::Cup:
        r.position = width + 2 - e.position;
        width += 2;
        break;
      case GeoKind::Cap:
        r.position = width - e.position;
        width -= 2;
        break;
      default:
        r.position = width - e.position;
        break;
    }
    out.events.push_back(r);
  }
  return from_geometric(out);
}

TangleWord shift_right(const TangleWord& sigma, int offset) {
  require_open(sigma, "shift_right");
  TangleWord out = sigma;
  out.strands += offset;
  for (TangleEvent& e : out.events) e.position += offset;
  return out;
}

TangleWord pad_right(const TangleWord& sigma, int count) {
  require_open(sigma, "pad_right");
  TangleWord out = sigma;
  out.strands += count;
  return out;
}

TangleWord permute_strands(const TangleWord& sigma, std::span<const int> order) {
  require_open(sigma, "permute_strands");
  const int n = sigma.strands;
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::ArityMismatch, "permutation size differs from strand count");
  std::vector<int> labels(order.begin(), order.end());
  {
    std::vector<int> check = labels;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i)
      if (check[static_cast<std::size_t>(i)] != i + 1)
        throw Error(ErrorCode::ArityMismatch, "not a permutation of 1..n");
  }
  // Bubble sort the target labels; every inverted pair is swapped exactly once
  // by a positive crossing, giving the positive permutation braid.
  std::vector<int> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (labels[static_cast<std::size_t>(p)] > labels[static_cast<std::size_t>(p + 1)]) {
        std::swap(labels[static_cast<std::size_t>(p)], labels[static_cast<std::size_t>(p + 1)]);
        swaps.push_back(p + 1);
        changed = true;
      }
    }
  }
  TangleWord out;
  out.strands = n;
  out.singular = sigma.singular;
  for (int p : swaps) out.events.push_back({EventKind::CrossPos, p});
  out.events.insert(out.events.end(), sigma.events.begin(), sigma.events.end());
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    out.events.push_back({EventKind::CrossNeg, *it});
  return out;
}

}  // namespace strlink
