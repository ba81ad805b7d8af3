// Deterministic random instances for tests and the `gen` subcommand.
//
// All draws come from the SplitMix64 stream
//   state += 0x9E3779B97F4A7C15
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27; z *= 0x94D049BB133111EB; return z ^ (z >> 31)
// with bounded draws taken as next() % m, so identical seeds give
// byte-identical files on every platform. Values live on a small grid
// (numerators in [-16, 16], denominators in [1, 16]) to keep brute-force
// payoffs exactly representable and readable.
#pragma once

#include <cstdint>

#include "dyngame/claims.hpp"
#include "dyngame/dynkin.hpp"
#include "dyngame/io.hpp"

namespace dyngame {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t m) { return next() % m; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

struct GeneratedGame {
  DynkinGame<Rational> game;
  Json file;  // the exact document `gen` emits
};

// Random binomial-tree game that passes the assumption checks by
// construction: Y1, Y2 drawn freely on the grid, X below Y (strictly for
// both players wherever the player-1 gap is strict), terminal Y1 pinned to
// X1. Tie convention p1. depth must lie in [1, 12].
GeneratedGame generate_game(int depth, std::uint64_t seed);

// Zero-sum instance: X1 <= Y1 on the grid, X2 = -Y1, Y2 = -X1.
DynkinGame<Rational> generate_zero_sum_game(int depth, std::uint64_t seed);

// Random claim with L <= U everywhere and terminal settlement in [L, U].
GameClaim generate_claim(int depth, std::uint64_t seed, UtilityFunction seller,
                         UtilityFunction buyer);

// Random grid-valued process, one draw per node.
AdaptedProcess<Rational> generate_process(const FiltrationTree& tree, SplitMix64& rng);

// Random binomial tree: depth as given, p_up uniform on the grid.
FiltrationTree generate_tree(int depth, SplitMix64& rng);

}  // namespace dyngame
