#pragma once

#include <cstdint>
#include <random>

#include "strlink/tangle.hpp"

namespace strlink {

/// Deterministic generator; draws are taken modulo the range so that a seed
/// gives the same words on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int k) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(k)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct MoveOptions {
  int max_crossings = -1;  // -1: original count + 4
};

/// Applies `count` random isotopy moves (Reidemeister moves, cup/cap
/// cancellations and slides, far commutations). Open or closed words.
TangleWord mutate(const TangleWord& sigma, std::uint64_t seed, int count, MoveOptions options = {});

struct GeneratorOptions {
  int strands = 2;
  int min_crossings = 2;
  int max_crossings = 12;
  int max_extra_points = 4;  // cups open at any time beyond the n strands
};

/// A random non-singular string link, valid by construction.
TangleWord random_string_link(Rng& rng, const GeneratorOptions& options);

/// A random string link with `doubles` of its crossings made double points.
TangleWord random_singular(Rng& rng, const GeneratorOptions& options, int doubles);

}  // namespace strlink
