#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

inline constexpr int kDefaultCrossingBudget = 16;

/// Conway polynomial, coefficient k multiplies z^k.
struct ConwayPoly {
  std::vector<std::int64_t> coeffs;

  std::int64_t coefficient(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < coeffs.size() ? coeffs[static_cast<std::size_t>(k)] : 0;
  }
  bool is_zero() const;
  void trim();
  std::string str() const;
  bool operator==(const ConwayPoly& o) const;
};

/// Signed Gauss code of a closed diagram: per component the cyclic list of
/// (crossing, passes-over) visits.
struct GaussCode {
  struct Pass {
    int crossing = 0;
    bool over = false;
    bool operator==(const Pass&) const = default;
  };
  std::vector<int> sign;  // indexed by crossing
  std::vector<std::vector<Pass>> components;
};

GaussCode gauss_code(const TangleWord& closed);

/// Crossing change at crossing x.
GaussCode switch_code(const GaussCode& g, int x);
/// Oriented smoothing at crossing x; the orientation of every arc is kept.
GaussCode smooth_code(const GaussCode& g, int x);

/// Skein recursion over descending diagrams, memoized per call. Throws
/// RecursionBudgetExceeded when the diagram, after removing kinks, has more
/// than `crossing_budget` crossings.
ConwayPoly conway(const TangleWord& closed, int crossing_budget = kDefaultCrossingBudget);
ConwayPoly conway(const GaussCode& code, int crossing_budget = kDefaultCrossingBudget);

/// z^2 coefficient of a one-component closed diagram.
std::int64_t casson_knot(const TangleWord& closed, int crossing_budget = kDefaultCrossingBudget);

/// Conway polynomial of a knot diagram from the normalized Alexander
/// polynomial (a minor of the Wirtinger Alexander matrix). Polynomial time,
/// no crossing budget. Throws MultiComponent for links.
ConwayPoly knot_conway(const TangleWord& closed);
ConwayPoly knot_conway(const GaussCode& code);

}  // namespace strlink
