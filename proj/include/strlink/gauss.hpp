#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

// Chord classes ------------------------------------------------------------

struct ChordEnd {
  int strand = 1;  // 1-based
  int rank = 1;    // 1-based, consecutive along each strand
  auto operator<=>(const ChordEnd&) const = default;
};

struct Chord {
  ChordEnd a;
  ChordEnd b;  // a < b
  bool self() const { return a.strand == b.strand; }
  auto operator<=>(const Chord&) const = default;
};

/// Canonical chord diagram of order <= 2 on n ordered strands.
struct ChordClass {
  int n = 1;
  std::vector<Chord> chords;

  /// Builds the canonical class from chords whose endpoint "ranks" are any
  /// comparable positions along their strands.
  static ChordClass canonical(int n, std::vector<Chord> raw);
  static ChordClass parse(const std::string& key);

  int order() const { return static_cast<int>(chords.size()); }
  bool has_isolated_chord() const;
  bool admissible() const { return !has_isolated_chord(); }
  /// Strings touched by the chords, sorted.
  std::vector<int> support() const;
  std::string key() const;

  auto operator<=>(const ChordClass&) const = default;
};

std::vector<ChordClass> enumerate_classes(int n, int order);

/// A relation sum_D coeff[D] * W(D) = 0 between order-2 classes.
struct FourTermRelation {
  std::map<ChordClass, int> terms;
  std::string origin;
};

/// All order-2 four-term relations on n strands (trivial ones dropped).
std::vector<FourTermRelation> four_term_relations(int n);

// Crossing data ------------------------------------------------------------

enum class CrossingType { Type1, Type2, Other };

struct CrossingDatum {
  int crossing = 0;     // crossing id in the word
  int epsilon = 1;      // sign
  int delta_tilde = 0;  // 0 iff the first branch met along the curling passes over
  CrossingType ctype = CrossingType::Other;
  std::pair<int, int> strings{1, 1};  // 1-based, first <= second
};

std::vector<CrossingDatum> gauss_data(const TangleWord& sigma);

int effective_delta(const CrossingDatum& datum, int delta_v);

/// Chord class of the pair of crossings (x, y) replaced by double points.
ChordClass chord_class(const TangleWord& sigma, int x, int y);
ChordClass chord_class(const StrandTrace& trace, int n, int x, int y);

/// Class of all double points of a singular word (at most two).
ChordClass singular_class(const TangleWord& sigma);

}  // namespace strlink
