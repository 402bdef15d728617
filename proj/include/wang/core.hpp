#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wang {

// Interned color symbol. The distinguished color "white" always has id 0, so a
// default-constructed Color is white. Equality compares ids; operator< compares
// names so that sorted output never depends on interning order.
class Color {
public:
    Color() : id_(0) {}

    static Color intern(std::string_view name);
    static Color white() { return Color(0); }

    std::string_view name() const;
    bool is_white() const { return id_ == 0; }
    std::uint32_t id() const { return id_; }

    friend bool operator==(Color a, Color b) { return a.id_ == b.id_; }
    friend bool operator!=(Color a, Color b) { return a.id_ != b.id_; }
    friend bool operator<(Color a, Color b) { return a.name() < b.name(); }

private:
    explicit Color(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

struct ColorHash {
    std::size_t operator()(Color c) const { return c.id(); }
};

// Unit square with a color on each side. The paper-style aliases up/down for
// top/bottom are intentionally not offered; left/top/right/bottom everywhere.
struct TileType {
    Color left;
    Color top;
    Color right;
    Color bottom;

    friend bool operator==(const TileType& a, const TileType& b) {
        return a.left == b.left && a.top == b.top && a.right == b.right &&
               a.bottom == b.bottom;
    }
    friend bool operator!=(const TileType& a, const TileType& b) { return !(a == b); }
    friend bool operator<(const TileType& a, const TileType& b);
};

struct TileTypeHash {
    std::size_t operator()(const TileType& t) const;
};

std::string to_string(const TileType& t);

// Finite set of tile types. Construction deduplicates while keeping first
// occurrence order; the index of a tile in tiles() is the stable tile ordering
// used for witness tie-breaking throughout the library.
class TileSet {
public:
    TileSet() = default;
    explicit TileSet(std::vector<TileType> tiles);

    const std::vector<TileType>& tiles() const { return tiles_; }
    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }
    const TileType& operator[](std::size_t i) const { return tiles_[i]; }

    bool contains(const TileType& t) const { return index_of(t).has_value(); }
    std::optional<int> index_of(const TileType& t) const;

    // Union of the four sides over all tiles, in first-occurrence order
    // (tile order, then left, top, right, bottom within a tile).
    const std::vector<Color>& colors() const { return colors_; }

private:
    std::vector<TileType> tiles_;
    std::vector<Color> colors_;
};

// Total assignment of tiles to an H x W grid. Rows and columns are 1-based to
// match the constraint language used in validity reports.
class Tiling {
public:
    Tiling(int height, int width, std::vector<TileType> cells);

    int height() const { return height_; }
    int width() const { return width_; }
    const TileType& at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row - 1) * width_ + (col - 1)];
    }
    const std::vector<TileType>& cells() const { return cells_; }

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.height_ == b.height_ && a.width_ == b.width_ && a.cells_ == b.cells_;
    }

private:
    int height_;
    int width_;
    std::vector<TileType> cells_;  // row-major
};

struct HeightSpec {
    static HeightSpec fixed(int rows);
    static HeightSpec arbitrary() { return HeightSpec{false, 0}; }

    bool is_fixed = true;
    int rows = 1;  // meaningful only when is_fixed

    friend bool operator==(const HeightSpec& a, const HeightSpec& b) {
        return a.is_fixed == b.is_fixed && (!a.is_fixed || a.rows == b.rows);
    }
};

// One decision-problem input: tile set, optional seed for cell (1,1), height
// spec and width. n is the instance size parameter (unary semantics matter
// only for complexity accounting, which this library does not certify).
struct TilingInstance {
    std::int64_t n = 0;
    TileSet tile_set;
    std::optional<TileType> seed;
    HeightSpec height = HeightSpec::fixed(1);
    int width = 1;

    // Throws std::invalid_argument when the invariants do not hold
    // (seed must be in the set, width >= 1, fixed height >= 1).
    void check() const;
};

struct Violation {
    // 1..4 are the numbered tiling constraints; 0 is the seed constraint.
    int constraint;
    int row;
    int col;
    std::string message;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Reference checker for constraints 1-4 plus the optional seed constraint.
// Reports every violation, not just the first. A tiling whose cells reference
// tiles outside the set is rejected with std::invalid_argument, which is
// distinct from an invalid (but well-formed) tiling.
ValidityReport validate_tiling(const TileSet& tile_set, const Tiling& tiling,
                               const std::optional<TileType>& seed = std::nullopt);

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

// Thrown when a solver or enumerator would exceed its node budget. Budget
// exhaustion is never reported as "no".
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t explored)
        : std::runtime_error("search budget exceeded after " + std::to_string(explored) +
                             " nodes"),
          explored_(explored) {}
    std::uint64_t explored() const { return explored_; }

private:
    std::uint64_t explored_;
};

struct BruteForceResult {
    bool exists = false;
    std::optional<Tiling> witness;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive oracle realizing the tiling definition directly: depth-first over
// cells in row-major order, trying tiles in set order, pruning assignments
// that already violate a constraint. The first full assignment found is the
// lexicographically first valid one under (row-major cell order, tile index).
// For an arbitrary-height instance, heights 1..height_cap are tried in order.
BruteForceResult brute_force_exists(const TilingInstance& instance, int height_cap = 16,
                                    const SearchBudget& budget = {});

}  // namespace wang
