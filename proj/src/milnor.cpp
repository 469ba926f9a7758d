#include "strlink/milnor.hpp"

#include <array>
#include <cstdlib>
#include <vector>

namespace strlink {

namespace {

// Magnus series truncated above degree two, on three tracked generators.
struct Series {
  std::int64_t c = 1;
  std::array<std::int64_t, 3> a{};
  std::array<std::array<std::int64_t, 3>, 3> b{};
};

Series operator*(const Series& x, const Series& y) {
  Series r;
  r.c = x.c * y.c;
  for (int i = 0; i < 3; ++i) r.a[i] = x.c * y.a[i] + x.a[i] * y.c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.b[i][j] = x.c * y.b[i][j] + x.b[i][j] * y.c + x.a[i] * y.a[j];
  return r;
}

Series inverse(const Series& x) {
  Series r;
  for (int i = 0; i < 3; ++i) r.a[i] = -x.a[i];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.b[i][j] = -x.b[i][j] + x.a[i] * x.a[j];
  return r;
}

Series power(const Series& x, int e) {
  const Series y = e >= 0 ? x : inverse(x);
  Series r;
  for (int k = 0; k < std::abs(e); ++k) r = r * y;
  return r;
}

Series generator(int slot) {
  Series r;
  if (slot >= 0) r.a[static_cast<std::size_t>(slot)] = 1;
  return r;
}

// Longitude of string c with strings a, b, c tracked in slots 0, 1, 2 and
// every other meridian sent to 1.
Series longitude(const TangleWord& sigma, int a, int b, int c) {
  const StrandTrace st = validate(sigma);
  const int n = sigma.strands;
  for (int s : {a, b, c})
    if (s < 1 || s > n) throw Error(ErrorCode::ArityMismatch, "string index " + std::to_string(s) + " out of range");
  if (a == c || b == c) throw Error(ErrorCode::ArityMismatch, "Milnor invariant needs a, b distinct from c");
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  slot[static_cast<std::size_t>(c - 1)] = 2;
  slot[static_cast<std::size_t>(b - 1)] = 1;
  slot[static_cast<std::size_t>(a - 1)] = 0;

  const std::size_t comps = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> arc(comps);
  std::vector<std::pair<int, int>> over_at(st.crossings.size(), {-1, -1});
  std::vector<std::vector<Series>> meridian(comps);
  for (std::size_t s = 0; s < comps; ++s) {
    int k = 0;
    for (std::size_t q = 0; q < st.visits[s].size(); ++q) {
      const Visit& v = st.visits[s][q];
      if (st.over(v)) over_at[static_cast<std::size_t>(v.crossing)] = {static_cast<int>(s), k};
      else ++k;
      arc[s].push_back(k);
    }
    meridian[s].assign(static_cast<std::size_t>(k) + 1, generator(slot[s]));
  }
  auto over_meridian = [&](const Visit& v) -> const Series& {
    const auto [os, k] = over_at[static_cast<std::size_t>(v.crossing)];
    return meridian[static_cast<std::size_t>(os)][static_cast<std::size_t>(k)];
  };
  // Each sweep fixes one more degree; three sweeps settle degree two.
  for (int sweep = 0; sweep < 3; ++sweep)
    for (std::size_t s = 0; s < comps; ++s) {
      std::size_t k = 0;
      for (const Visit& v : st.visits[s]) {
        if (st.over(v)) continue;
        const int e = st.crossings[static_cast<std::size_t>(v.crossing)].sign;
        const Series& y = over_meridian(v);
        meridian[s][k + 1] = power(y, -e) * meridian[s][k] * power(y, e);
        ++k;
      }
    }
  const std::size_t sc = static_cast<std::size_t>(c - 1);
  Series l;
  for (const Visit& v : st.visits[sc]) {
    if (st.over(v)) continue;
    l = l * power(over_meridian(v), st.crossings[static_cast<std::size_t>(v.crossing)].sign);
  }
  return l * power(generator(2), static_cast<int>(-l.a[2]));
}

}  // namespace

std::int64_t milnor_magnus(const TangleWord& sigma, int a, int b, int c) {
  if (a == b) throw Error(ErrorCode::ArityMismatch, "triple linking needs distinct indices");
  return longitude(sigma, a, b, c).b[0][1];
}

std::int64_t linking_magnus(const TangleWord& sigma, int a, int c) { return longitude(sigma, a, a, c).a[0]; }

}  // namespace strlink
