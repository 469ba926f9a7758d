#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace strlink::linalg {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

/// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);

std::size_t rank(Matrix m, std::size_t cols);

struct Solution {
  std::vector<Rational> particular;         // free variables set to zero
  std::vector<std::vector<Rational>> kernel;  // basis of the null space
};

/// Solves a x = b exactly; nullopt when inconsistent.
std::optional<Solution> solve(const Matrix& a, const std::vector<Rational>& b, std::size_t cols);

bool is_integer(const Rational& r);
std::int64_t to_int(const Rational& r);

}  // namespace strlink::linalg
