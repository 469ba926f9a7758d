#pragma once

#include <span>
#include <string>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink::fixtures {

/// 1-string trefoil, phi = 1.
TangleWord long_trefoil();
/// 1-string figure-eight knot, phi = -1.
TangleWord long_figure_eight();
/// Whitehead-type 2-string link W: trivial strings, mu12 = 0, plat closure a
/// trefoil, V2 = 1.
TangleWord whitehead();
/// The 2-string link w_12: trivial strings, mu12 = 0, plat closure a
/// figure-eight knot, V2 = -1.
TangleWord whitehead_figure_eight();
/// 3-string Borromean string link, mu123 = 1, pairwise trivial.
TangleWord borromean();
/// Full twist of two strings, mu12 = sign.
TangleWord clasp(int sign);

/// Places the k-string link tau on strings `strings` (increasing) of n
/// strings. The strings of tau are brought together and returned passing over
/// the strings between them, so the others stay split from them.
TangleWord embed(const TangleWord& tau, int n, std::span<const int> strings);

/// Named fixture: one of fixture_names(). When the environment variable
/// STRLINK_FIXTURE_DIR is set and holds NAME.tw, that file is used instead.
TangleWord fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace strlink::fixtures
