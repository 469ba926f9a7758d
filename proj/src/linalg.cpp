#include "strlink/linalg.hpp"

#include "strlink/error.hpp"

namespace strlink::linalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

std::optional<Solution> solve(const Matrix& a, const std::vector<Rational>& b, std::size_t cols) {
  Matrix m = a;
  for (std::size_t r = 0; r < m.size(); ++r) {
    m[r].resize(cols, 0);
    m[r].push_back(b[r]);
  }
  const auto pivots = rref(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][cols] != 0) return std::nullopt;
  Solution s;
  s.particular.assign(cols, 0);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.particular[pivots[r]] = m[r][cols];
    is_pivot[pivots[r]] = 1;
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> k(cols, 0);
    k[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -m[r][f];
    s.kernel.push_back(std::move(k));
  }
  return s;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t to_int(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::Inconsistent, "non-integral value " + r.str());
  return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
}

}  // namespace strlink::linalg
