#pragma once

#include <optional>
#include <string>

#include "wang/core.hpp"
#include "wang/game.hpp"

namespace wang {

enum class Family { SquareN, ExpLadder, LineN, GameAlt };

Family family_from_name(const std::string& name);

struct Generated {
    TilingInstance instance;
    std::optional<PlayerSequence> sequence;
    std::string description;
};

// Benchmark instances over fixed tile sets, sized by the requested family:
//   square-n     n x n squares
//   exp-ladder   expo(k, n) x n rectangles (sizes past desk scale are
//                generator-only and never solved here)
//   line-n       n x 1 lines
//   game-alt     (k*n) x n rectangles with the E^n(A^nE^n)^(k-1) sequence
// Overflow in expo propagates as std::overflow_error.
Generated gen_instance(Family family, std::int64_t n, int k = 1);

// The fixed 3x3-solvable benchmark tile set used by the rectangle families.
TileSet benchmark_tile_set();
TileType benchmark_seed();

}  // namespace wang
