#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "strlink/tangle.hpp"
#include "strlink/weights.hpp"

namespace strlink {

struct InvariantValue {
  std::string name;
  std::vector<int> indices;
  std::int64_t value = 0;
};

/// Half the signed count of crossings between strings i and j (1-based).
std::int64_t linking(const TangleWord& sigma, int i, int j);

/// Casson invariant of a 1-string link by the Lannes formula.
std::int64_t casson_long(const TangleWord& sigma1);
/// Casson invariant of a 1-string link as the z^2 coefficient of its closure.
std::int64_t casson_def(const TangleWord& sigma1);
/// Casson invariant of string i of sigma (definitional).
std::int64_t casson_of_string(const TangleWord& sigma, int i);

std::int64_t v2(const TangleWord& sigma2);
std::int64_t v2_def(const TangleWord& sigma2);
/// V2 of the 2-string link sigma_i u sigma_j (definitional).
std::int64_t v2_pair(const TangleWord& sigma, int i, int j);

std::int64_t v_pm(const TangleWord& sigma3, int sign);
std::int64_t mu123(const TangleWord& sigma3);
std::int64_t mu123_def(const TangleWord& sigma3);

/// mu_abc of sigma for distinct a, b, c. For a < b < c this is mu123_def of
/// the sublink on {a, b, c}; other orders are read off the longitudes by
/// milnor_magnus, since relabelling strings by a braid moves the longitudes.
std::int64_t milnor(const TangleWord& sigma, int a, int b, int c);
/// The same through the Lannes formula with the built-in table.
std::int64_t milnor_lannes(const TangleWord& sigma, int a, int b, int c);

using Evaluator = std::function<std::int64_t(const TangleWord&)>;

/// Value of v extended to singular words by the skein rule
/// v(double) = v(positive) - v(negative): the signed 2^d expansion.
std::int64_t evaluate_singular(const Evaluator& v, const TangleWord& sigma);

// Universal order-two expansion ----------------------------------------------

/// Values of an order-two invariant on the fixture singular words: the
/// constant, one double point on string i, one between i and j, and every
/// admissible order-two class.
struct InitialData {
  int n = 0;
  std::int64_t constant = 0;
  std::map<int, std::int64_t> self;                       // ud_i
  std::map<std::pair<int, int>, std::int64_t> single;     // SING_ij
  std::map<ChordClass, std::int64_t> order_two;           // keyed on n strands

  std::int64_t at(const ChordClass& c) const;
};

/// Fixture singular words realizing a chord class (order <= 2) on n strands.
TangleWord class_representative(const ChordClass& c);
/// One double point between strings i < j: a positive clasp with one
/// crossing made double.
TangleWord single_double_point(int n, int i, int j);

InitialData initial_data(const Evaluator& v, int n);

/// Throws NotOrderTwo unless v vanishes on the probe words with three
/// double points.
void check_order_two(const Evaluator& v, int n, int probes = 4, std::uint64_t seed = 1);

/// Right-hand side of the universal formula for an order-two invariant with
/// the given initial data, evaluated on sigma.
std::int64_t murakami_expansion(const InitialData& data, const TangleWord& sigma);

// Symmetries of the triple linking numbers -----------------------------------

struct SymmetryReport {
  std::map<std::string, std::int64_t> mu;  // "123", "213", ... -> value
  std::int64_t mu12 = 0, mu13 = 0, mu23 = 0;
  std::vector<std::pair<std::string, bool>> identities;
  bool all_hold() const;
};

SymmetryReport symmetry_check(const TangleWord& sigma3);

struct NamedInvariant {
  std::string name;
  Evaluator eval;
};

/// The order-two invariants of n-string links by their definitional or
/// direct routes: phi_i, mu_i_j, mu_sq_i_j, V2_i_j, plat_phi_i_j (Casson
/// invariant of the plat closure of strings i, j), mu_i_j_k (all orders),
/// mu_prod_a_b_c_d, mu_i_j_k_l, and V-, V+ for n = 3. Each built-in weight
/// system also appears as lannes:NAME.
std::vector<NamedInvariant> invariant_catalog(int n);
/// Looks a name up in invariant_catalog(n); throws UnknownName.
Evaluator find_invariant(const std::string& name, int n);

/// Every applicable invariant of sigma, for reports.
std::vector<InvariantValue> all_invariants(const TangleWord& sigma);

}  // namespace strlink
