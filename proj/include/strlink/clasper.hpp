#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

// Degree one: struts ----------------------------------------------------------

struct Strut {
  int i = 1;
  int j = 2;
  auto operator<=>(const Strut&) const = default;
};

/// Integer combination of struts I_{i,j}.
using A1Element = std::map<Strut, std::int64_t>;

/// Drops I_{i,i}, orders each strut as i < j and merges terms.
A1Element a1_normalize(const A1Element& x, int n);

// Degree two: Y-diagrams ------------------------------------------------------

struct YLeg {
  int color = 1;
  int tiebreak = 1;  // only compared among legs of equal color
  auto operator<=>(const YLeg&) const = default;
};

/// Y[l0; l1; l2], legs in cyclic order.
struct YDiagram {
  std::array<YLeg, 3> legs{};

  static YDiagram distinct(int i, int j, int k);
  static YDiagram pair(int i, int m, int n, int j);  // Y[(i,m);(i,n);j]
  static YDiagram triple(int i, int m, int n, int l);

  int distinct_colors() const;
  std::string str() const;
  auto operator<=>(const YDiagram&) const = default;
};

using A2Element = std::map<YDiagram, std::int64_t>;

/// Normal form under AS, AS2 and W: Y[i;j;k] with i<j<k,
/// Y[(i,1);(i,2);j] with i<j, and Y[(i,1);(i,2);(i,3)].
A2Element a2_normalize(const A2Element& x, int n);
/// Normal form of a single diagram: its sign and basis element.
std::pair<int, YDiagram> a2_normal(const YDiagram& y, int n);

/// Basis of the normal forms on n colors.
std::vector<YDiagram> a2_basis(int n);
/// Every diagram with legs colored in 1..n (tiebreaks distinct among equal
/// colors), before normalization.
std::vector<YDiagram> all_ydiagrams(int n);

// Lambda^3 H + S^2 H ----------------------------------------------------------

struct ClassVector {
  int n = 0;
  std::map<std::array<int, 3>, std::int64_t> wedge;  // i<j<k: e_i ^ e_j ^ e_k
  std::map<std::pair<int, int>, std::int64_t> sym;   // i<=j: e_i (x) e_j

  static ClassVector zero(int n);
  static std::size_t dimension(int n);
  /// Coordinates in the order: wedge basis, then sym basis, lexicographic.
  std::vector<std::int64_t> coordinates() const;
  bool operator==(const ClassVector&) const = default;
};

/// Linear extension of the three defining rules; applies to any element.
ClassVector eta(const A2Element& x, int n);
ClassVector eta(const YDiagram& y, int n);

/// Rank of eta on the span of all diagrams on n colors.
std::size_t a2_rank(int n);

// Representatives and classification -------------------------------------------

/// Negative clasp between strings i and j of n: mu_ij = -1.
TangleWord psi1_rep(const Strut& s, int n);
/// A fixture string link whose invariant vector is eta(y): the Borromean
/// string link, a Whitehead link or a knot on one string, or the
/// corresponding inverse class when y normalizes with sign -1. For
/// Y[(j,m);(j,n);i] with i<j the Whitehead link is built on the reversed
/// strings, giving w_ji rather than w_ij.
TangleWord psi2_rep(const YDiagram& y, int n);

/// sum mu_ijk e_i^e_j^e_k - sum V2(s_i u s_j) e_i(x)e_j + sum phi_i e_i(x)e_i
ClassVector invariant_vector(const TangleWord& sigma);

/// -sum_{i<j} mu_ij I_{i,j}
A1Element mu2_vector(const TangleWord& sigma);
bool c2_equivalent(const TangleWord& sigma, const TangleWord& tau);
/// Throws NotInSL2 when some linking number of either word is nonzero.
bool c3_equivalent(const TangleWord& sigma, const TangleWord& tau);

std::string format(const A1Element& x);
std::string format(const ClassVector& v);

}  // namespace strlink
