#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wang/core.hpp"

namespace wang {

// One horizontally valid row, stored as indices into the tile set that
// produced it. Indices keep memo keys compact; materialize() recovers tiles.
struct RowState {
    std::vector<std::int32_t> tiles;

    int width() const { return static_cast<int>(tiles.size()); }
    std::vector<TileType> materialize(const TileSet& set) const;

    friend bool operator==(const RowState& a, const RowState& b) { return a.tiles == b.tiles; }
    friend bool operator<(const RowState& a, const RowState& b) { return a.tiles < b.tiles; }
};

struct RowStateHash {
    std::size_t operator()(const RowState& r) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int32_t v : r.tiles) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct RowConstraints {
    bool top_white = false;
    bool bottom_white = false;
    std::optional<TileType> first_tile;
    // Exact top color per column (used to stream the successors of a row).
    std::optional<std::vector<Color>> required_top;
};

// Streams the horizontally valid rows of the given width satisfying the
// constraints, each exactly once, in lexicographic order over (column,
// tile index). Rows are built column by column so the |T|^W space is never
// materialized for widths where nothing matches.
class RowEnumerator {
public:
    RowEnumerator(const TileSet& set, int width, RowConstraints constraints);

    std::optional<RowState> next();

private:
    bool tile_ok(int col, std::int32_t tile_index) const;

    const TileSet& set_;
    int width_;
    RowConstraints constraints_;
    std::vector<std::int32_t> stack_;  // current partial row, stack_[i] = tile index
    bool done_ = false;
};

// Convenience collector over RowEnumerator.
std::vector<RowState> enumerate_rows(const TileSet& set, int width,
                                     const RowConstraints& constraints);

std::vector<Color> row_bottom_colors(const TileSet& set, const RowState& row);

// Checks one concrete row against the horizontal-validity rules plus the
// given constraints; used to audit externally supplied rows.
bool row_satisfies(const TileSet& set, const RowState& row, const RowConstraints& constraints);

// Columnwise bottom/top match between two rows of equal width.
// Unequal widths are a usage error, not "false".
bool row_compatible(const TileSet& set, const RowState& upper, const RowState& lower);

struct SolveStats {
    std::uint64_t rows_explored = 0;
    std::uint64_t states_memoized = 0;
};

struct SolveResult {
    bool exists = false;
    std::optional<Tiling> witness;
    SolveStats stats;
};

// Fixed-height existence: depth-first over rows with (row index, RowState)
// memoization of dead states. Throws BudgetExceeded instead of guessing.
SolveResult solve_fixed(const TilingInstance& instance, const SearchBudget& budget = {});

// Arbitrary-height existence as reachability in the row graph: start rows have
// white tops (and the seed at column 1), edges are row_compatible, accepting
// rows have white bottoms. Breadth-first, so the witness height is minimal.
SolveResult solve_arbitrary(const TilingInstance& instance, const SearchBudget& budget = {});

// Seed-free variant; dispatches on the instance height spec.
SolveResult solve_seed_free(const TilingInstance& instance, const SearchBudget& budget = {});

// k-fold exponential tower: expo(0, n) = n, expo(k, n) = 2^expo(k-1, n).
// Throws std::overflow_error when the result does not fit.
std::uint64_t expo(int k, std::uint64_t n);

}  // namespace wang
