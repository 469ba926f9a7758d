#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "strlink/error.hpp"

namespace strlink {

// Morse presentation of a diagram: events are read bottom to top, each one
// acting on the 1-based position of the left of two adjacent active points.

enum class EventKind { CrossPos, CrossNeg, CrossDouble, Cup, Cap };

struct TangleEvent {
  EventKind kind = EventKind::CrossPos;
  int position = 1;

  bool is_crossing() const {
    return kind == EventKind::CrossPos || kind == EventKind::CrossNeg ||
           kind == EventKind::CrossDouble;
  }
  bool operator==(const TangleEvent&) const = default;
};

struct TangleWord {
  int strands = 0;  // active points at the bottom (0 for closed words)
  std::vector<TangleEvent> events;
  bool closed = false;
  bool singular = false;

  static TangleWord identity(int n);

  int crossing_count() const;
  int double_point_count() const;
  /// Event indices of the crossings, in word order. Crossing ids index this list.
  std::vector<std::size_t> crossing_events() const;

  bool operator==(const TangleWord&) const = default;
};

// Strand tracing ----------------------------------------------------------

struct BranchRef {
  int component = 0;  // 0-based component (string) index
  int rank = 0;       // 0-based position in that component's visit list
  int direction = 1;  // +1 traversed upward, -1 downward
};

struct CrossingRecord {
  std::size_t event = 0;
  int sign = 0;  // +1 / -1, 0 for a double point
  // The slash branch joins bottom-left to top-right, the back branch
  // bottom-right to top-left.
  BranchRef slash;
  BranchRef back;
  bool slash_over = false;

  const BranchRef& over() const { return slash_over ? slash : back; }
  const BranchRef& under() const { return slash_over ? back : slash; }
  bool is_double() const { return sign == 0; }
};

struct Visit {
  int crossing = 0;  // index into StrandTrace::crossings
  bool slash = false;
};

struct StrandTrace {
  int components = 0;
  std::vector<CrossingRecord> crossings;
  std::vector<std::vector<Visit>> visits;  // per component, in traversal order

  /// Over flag of a visit; meaningless for double points.
  bool over(const Visit& v) const {
    const CrossingRecord& c = crossings[static_cast<std::size_t>(v.crossing)];
    return v.slash == c.slash_over;
  }
};

/// Checks the level structure only (positions in range, boundary counts).
void check_levels(const TangleWord& word);

/// Traces a word under its canonical orientation without imposing
/// string-link conditions. Open strands start at the bottom and go up,
/// remaining top points start downward; closed loops are ordered by their
/// lowest cup and leave its left leg upward.
StrandTrace trace(const TangleWord& word);

/// Full validation: for open words, string k must run from bottom k to top k
/// and there may be no closed components.
StrandTrace validate(const TangleWord& word);

// Geometric form ----------------------------------------------------------

// Orientation-free description: crossings record which branch is over.
// Constructions that reorient strands go through this form so that the
// picture, not the sign, is preserved.

enum class GeoKind { Cross, Double, Cup, Cap };

struct GeoEvent {
  GeoKind kind = GeoKind::Cross;
  int position = 1;
  bool slash_over = true;
  bool operator==(const GeoEvent&) const = default;
};

struct GeoWord {
  int strands = 0;
  bool closed = false;
  std::vector<GeoEvent> events;
};

GeoWord to_geometric(const TangleWord& word);
TangleWord from_geometric(const GeoWord& geo);

// Constructions -----------------------------------------------------------

TangleWord stack(const TangleWord& lower, const TangleWord& upper);
TangleWord close(const TangleWord& sigma);
TangleWord plat_close(const TangleWord& sigma);
TangleWord curl(const TangleWord& sigma);
/// The 2-string link obtained by stacking a crossing of sign `sign` between
/// strings 1 and 3 over string 2 and joining the two endpoints of string 1.
TangleWord tilde(const TangleWord& sigma, int sign);
/// Keeps the 1-based strings listed in `keep` (re-indexed in increasing order).
TangleWord sublink(const TangleWord& sigma, std::span<const int> keep);
TangleWord switch_crossing(const TangleWord& sigma, int crossing_id);
/// Oriented smoothing of the picture. The result carries its canonical
/// orientation, which on a split self-crossing may reverse one of the two new
/// loops; smooth_code keeps the inherited orientation.
TangleWord smooth(const TangleWord& sigma, int crossing_id);
TangleWord make_double(const TangleWord& sigma, int crossing_id);
/// Replaces a double point by a crossing of the given sign.
TangleWord resolve_double(const TangleWord& sigma, int crossing_id, int sign);
TangleWord mirror(const TangleWord& sigma);
/// Half turn about the vertical axis: string k becomes string n + 1 - k.
TangleWord reverse_strings(const TangleWord& sigma);
/// Moves events `offset` positions to the right, adding `offset` trivial
/// strands on the left.
TangleWord shift_right(const TangleWord& sigma, int offset);
/// Adds `count` trivial strands on the right.
TangleWord pad_right(const TangleWord& sigma, int count);
/// Reorders strings: the result's string t is the input's string order[t]
/// (1-based). Realized by conjugating with the positive permutation braid.
TangleWord permute_strands(const TangleWord& sigma, std::span<const int> order);

}  // namespace strlink
