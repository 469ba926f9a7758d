#pragma once

#include <cstdint>

#include "strlink/tangle.hpp"

namespace strlink {

/// Milnor invariant mu(a, b, c) of a string link, for distinct 1-based
/// strings: the coefficient of X_a X_b in the Magnus expansion of the
/// zero-framed longitude of string c. The meridians of the Wirtinger arcs are
/// solved modulo the third lower central subgroup by iterating the crossing
/// relations from the bottom meridians.
std::int64_t milnor_magnus(const TangleWord& sigma, int a, int b, int c);

/// Coefficient of X_a in the longitude of string c: the linking number.
std::int64_t linking_magnus(const TangleWord& sigma, int a, int c);

}  // namespace strlink
