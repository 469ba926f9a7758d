#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "strlink/gauss.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

/// Integer weights on the order-2 chord classes of n strands. A weight
/// system of a k-strand invariant of a larger link is applied to the
/// sublink on `support`.
struct WeightSystem {
  std::string name;
  int n = 1;
  std::vector<int> support;  // 1-based strings of the evaluated link; empty = all
  std::map<ChordClass, std::int64_t> values;
  int delta_v = 0;
  bool validated = false;

  std::int64_t at(const ChordClass& c) const;
};

/// Empty iff w satisfies 1T and 4T.
std::vector<std::string> check_weight(const WeightSystem& w);
/// Marks w validated, or throws UnvalidatedWeight listing the first violation.
WeightSystem validated(WeightSystem w);

/// Dimension of the admissible order-2 classes on n strands modulo 4T.
std::size_t four_term_quotient_rank(int n);

/// Classes whose Lannes coefficient always vanishes: for three strands, two
/// chords that both join strings 1 and 3.
bool inert(const ChordClass& c);

/// Twice the Lannes state sum, as a combination of classes:
/// 2 v(sigma) = sum_D coeff[D] W(D).
std::map<ChordClass, std::int64_t> lannes_coefficients(const TangleWord& sigma, int delta_v);

/// Evaluates the Lannes-type formula for w (applying it to w's support).
std::int64_t lannes_eval(const WeightSystem& w, const TangleWord& sigma);

struct CalibrationSample {
  TangleWord word;
  std::int64_t value = 0;
};

/// Solves for the weight system reproducing the sample values exactly.
/// Throws Inconsistent when no delta_v candidate admits an integral solution
/// and Underdetermined (with the kernel) when the values on non-inert classes
/// are not unique.
WeightSystem calibrate(int n, std::span<const CalibrationSample> corpus, std::vector<int> delta_candidates,
                       const std::string& name = "calibrated");

/// Named tables: casson_i, mu_sq_i_j, V2_i_j, mu_i_j_k (any order of three
/// distinct indices), mu_prod_a_b_c_d (pairs sharing one index), mu_i_j_k_l
/// (the product mu_ij mu_kl of disjoint pairs), W12, W22.
WeightSystem builtin(const std::string& name);
/// All built-in names whose indices are at most max_strands.
std::vector<std::string> builtin_names(int max_strands);

std::string serialize_weights(const WeightSystem& w);
WeightSystem parse_weights(const std::string& text);

// Gauss-diagram pairings ---------------------------------------------------

struct Arrow {
  ChordEnd tail;  // over branch
  ChordEnd head;  // under branch
  int sign = 0;   // 0 matches either sign
  auto operator<=>(const Arrow&) const = default;
};

struct ArrowDiagramPattern {
  int n = 1;
  std::vector<Arrow> arrows;  // at most two, ranks as in ChordClass
  std::int64_t coefficient = 1;

  /// Canonical form: ranks re-numbered per strand, arrows sorted.
  ArrowDiagramPattern canonical() const;
  std::string key() const;
};

/// Sum over patterns of coefficient * (signed count of sub-diagrams of the
/// Gauss diagram of sigma matching the pattern); each match contributes the
/// product of its crossing signs.
std::int64_t gauss_pairing(std::span<const ArrowDiagramPattern> patterns, const TangleWord& sigma);

/// All unsigned arrow diagrams with one or two arrows on n strands.
std::vector<ArrowDiagramPattern> enumerate_arrow_diagrams(int n);

/// Searches for integer coefficients on enumerate_arrow_diagrams(n) whose
/// pairing reproduces the sample values; returns the patterns with nonzero
/// coefficient. Throws Inconsistent when no combination fits.
std::vector<ArrowDiagramPattern> search_pairing(int n, std::span<const CalibrationSample> corpus);

}  // namespace strlink
