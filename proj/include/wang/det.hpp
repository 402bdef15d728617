#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wang/core.hpp"
#include "wang/solve.hpp"

namespace wang {

enum class ColorClass { One, Two };

// Total class assignment over the tile set's colors plus white.
class ColorPartition {
public:
    ColorPartition() = default;
    explicit ColorPartition(std::vector<std::pair<Color, ColorClass>> entries);

    ColorClass class_of(Color c) const;
    bool knows(Color c) const { return map_.count(c.id()) != 0; }

    // Entries sorted by color name, for stable printing.
    std::vector<std::pair<Color, ColorClass>> entries() const;

private:
    std::vector<std::pair<Color, ColorClass>> list_;
    std::unordered_map<std::uint32_t, ColorClass> map_;
};

// Checkable explanation of why no valid partition exists: a chain of forced
// class assignments ending in a contradiction, each step citing the tile or
// tile pair that forces it.
struct DetObstruction {
    std::string summary;
    std::vector<std::string> steps;
    std::vector<Color> colors;
    std::optional<std::pair<int, int>> colliding_tiles;
};

struct DeterminismCertificate {
    bool deterministic = false;
    std::optional<ColorPartition> partition;
    std::optional<DetObstruction> counterexample;
};

// A tile set is deterministic when its colors split into classes One/Two with
// white in One such that
//   1. every tile's top and bottom colors lie in different classes;
//   2. no two distinct tiles agree on (left, top) when both of those colors
//      are in class One;
//   3. no two distinct tiles agree on (right, top) when both are in class Two.
// The keyed-uniqueness bullets bind only when the key colors lie in the stated
// classes; machine-derived tile sets rely on that (copy and head-receive tiles
// share (white, a') keys whose top class is Two). The search for a partition
// is a complete 2-SAT over the color classes, so the verdict agrees with
// exhaustive search over all partitions.
DeterminismCertificate detect_deterministic(const TileSet& set);

// Validates the three bullets for a concrete partition; returns the first
// failure description, or nullopt when the partition is valid.
std::optional<std::string> check_partition(const TileSet& set, const ColorPartition& partition);

struct Cell {
    int row;
    int col;
};

// Raised when a fill step sees two or more candidates that the determinism
// certificate cannot order. This signals a detector/definition mismatch and is
// never downgraded to a "no" answer.
class RuntimeNondeterminism : public std::runtime_error {
public:
    RuntimeNondeterminism(Cell cell, std::string what)
        : std::runtime_error(std::move(what)), cell_(cell) {}
    Cell cell() const { return cell_; }

private:
    Cell cell_;
};

struct CompletionResult {
    SolveResult result;
    std::optional<Cell> stuck_at;   // zero candidates at this cell ended the fill
    std::uint64_t backtracks = 0;   // structurally always zero
};

// Fills the rectangle one cell at a time in Boustrophedon order (odd rows
// left to right, even rows right to left), starting from the seed at (1,1).
// Candidates at each cell are the tiles matching every already-known neighbor
// color plus the border-white constraints. Exactly one candidate is placed;
// zero candidates reports "stuck" with the cell. When several candidates
// remain, the only split this routine resolves itself is the continue/close
// fork -- candidates identical on the known sides where exactly one has a
// non-white bottom -- which is taken as "continue" before the last row (white
// bottoms are forced on the last row by the border). Machine-derived tile
// sets hit that fork on every blank column of an even row; any other
// ambiguity throws RuntimeNondeterminism.
CompletionResult boustrophedon_complete(const TileSet& set,
                                        const DeterminismCertificate& certificate,
                                        const TileType& seed, int height, int width);

}  // namespace wang
