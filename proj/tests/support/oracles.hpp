#pragma once

// Independent oracles for cross-checking the library. Everything here
// re-derives its answer straight from the definitions, without calling the
// implementation paths under test.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wang/core.hpp"
#include "wang/game.hpp"
#include "wang/tmred.hpp"
#include "wang/width1.hpp"

namespace oracles {

// Full enumeration of all |T|^(H*W) assignments by an odometer, each checked
// against a local constraint verifier. Throws when the space exceeds the
// limit; meant for very small instances only.
bool odometer_exists(const wang::TilingInstance& instance, int height_cap = 8,
                     std::uint64_t space_limit = 1u << 22);

// Local re-statement of constraints 1-4 plus the seed, used by the odometer
// and available to tests directly.
bool grid_valid(const wang::TilingInstance& instance, const std::vector<wang::TileType>& cells,
                int height);

// Exhaustive search over all 2^|colors| partitions for the determinism bullets.
bool partition_exists(const wang::TileSet& set);

// Explicit minimax over full row sequences of a fixed-height game; no
// memoization, rows generated by an odometer filter.
bool game_minimax(const wang::TilingInstance& instance, const wang::ResolvedSequence& seq);

bool bfs_reachable(const wang::DirectedGraph& g);
bool union_find_reachable(const wang::UndirectedGraph& g);

// Does some run of the machine on the input, within n tape cells, sit in the
// primed final state over an erased tape at configuration index exactly n-1?
// This is the execution-side mirror of the n x n tiling.
bool tm_square_accepts(const wang::NormalizedTM& tm, const std::vector<std::string>& input,
                       int n);

}  // namespace oracles
