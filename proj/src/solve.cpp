#include "wang/solve.hpp"

#include <algorithm>
#include <unordered_set>
#include <unordered_map>

namespace wang {

std::vector<TileType> RowState::materialize(const TileSet& set) const {
    std::vector<TileType> out;
    out.reserve(tiles.size());
    for (std::int32_t i : tiles) out.push_back(set[static_cast<std::size_t>(i)]);
    return out;
}

RowEnumerator::RowEnumerator(const TileSet& set, int width, RowConstraints constraints)
    : set_(set), width_(width), constraints_(std::move(constraints)) {
    if (width < 1) throw std::invalid_argument("row width must be >= 1");
    if (constraints_.required_top &&
        static_cast<int>(constraints_.required_top->size()) != width) {
        throw std::invalid_argument("required_top size must equal the row width");
    }
    stack_.reserve(width);
}

bool RowEnumerator::tile_ok(int col, std::int32_t tile_index) const {
    const TileType& t = set_[static_cast<std::size_t>(tile_index)];
    if (col == 0) {
        if (!t.left.is_white()) return false;
        if (constraints_.first_tile && !(t == *constraints_.first_tile)) return false;
    } else if (set_[static_cast<std::size_t>(stack_[col - 1])].right != t.left) {
        return false;
    }
    if (col == width_ - 1 && !t.right.is_white()) return false;
    if (constraints_.top_white && !t.top.is_white()) return false;
    if (constraints_.required_top && t.top != (*constraints_.required_top)[col]) return false;
    if (constraints_.bottom_white && !t.bottom.is_white()) return false;
    return true;
}

std::optional<RowState> RowEnumerator::next() {
    if (done_) return std::nullopt;
    const auto n_tiles = static_cast<std::int32_t>(set_.size());
    std::int32_t candidate = 0;
    if (stack_.size() == static_cast<std::size_t>(width_)) {
        candidate = stack_.back() + 1;
        stack_.pop_back();
    }
    while (true) {
        if (candidate >= n_tiles) {
            if (stack_.empty()) {
                done_ = true;
                return std::nullopt;
            }
            candidate = stack_.back() + 1;
            stack_.pop_back();
            continue;
        }
        const int col = static_cast<int>(stack_.size());
        if (tile_ok(col, candidate)) {
            stack_.push_back(candidate);
            if (static_cast<int>(stack_.size()) == width_) return RowState{stack_};
            candidate = 0;
        } else {
            ++candidate;
        }
    }
}

std::vector<RowState> enumerate_rows(const TileSet& set, int width,
                                     const RowConstraints& constraints) {
    std::vector<RowState> rows;
    RowEnumerator stream(set, width, constraints);
    while (auto row = stream.next()) rows.push_back(std::move(*row));
    return rows;
}

bool row_compatible(const TileSet& set, const RowState& upper, const RowState& lower) {
    if (upper.width() != lower.width()) {
        throw std::invalid_argument("row_compatible: width mismatch");
    }
    for (int i = 0; i < upper.width(); ++i) {
        if (set[static_cast<std::size_t>(upper.tiles[i])].bottom !=
            set[static_cast<std::size_t>(lower.tiles[i])].top) {
            return false;
        }
    }
    return true;
}

std::vector<Color> row_bottom_colors(const TileSet& set, const RowState& row) {
    std::vector<Color> out;
    out.reserve(row.tiles.size());
    for (std::int32_t i : row.tiles) out.push_back(set[static_cast<std::size_t>(i)].bottom);
    return out;
}

bool row_satisfies(const TileSet& set, const RowState& row, const RowConstraints& constraints) {
    const int w = row.width();
    if (w < 1) return false;
    if (constraints.required_top && static_cast<int>(constraints.required_top->size()) != w) {
        return false;
    }
    for (int col = 0; col < w; ++col) {
        const std::int32_t index = row.tiles[static_cast<std::size_t>(col)];
        if (index < 0 || index >= static_cast<std::int32_t>(set.size())) return false;
        const TileType& t = set[static_cast<std::size_t>(index)];
        if (col == 0) {
            if (!t.left.is_white()) return false;
            if (constraints.first_tile && !(t == *constraints.first_tile)) return false;
        } else if (set[static_cast<std::size_t>(row.tiles[col - 1])].right != t.left) {
            return false;
        }
        if (col == w - 1 && !t.right.is_white()) return false;
        if (constraints.top_white && !t.top.is_white()) return false;
        if (constraints.required_top && t.top != (*constraints.required_top)[col]) return false;
        if (constraints.bottom_white && !t.bottom.is_white()) return false;
    }
    return true;
}

namespace {

std::vector<Color> bottom_colors(const TileSet& set, const RowState& row) {
    return row_bottom_colors(set, row);
}

Tiling tiling_from_rows(const TileSet& set, const std::vector<RowState>& rows) {
    std::vector<TileType> cells;
    cells.reserve(rows.size() * rows.front().tiles.size());
    for (const RowState& row : rows) {
        for (std::int32_t i : row.tiles) cells.push_back(set[static_cast<std::size_t>(i)]);
    }
    return Tiling(static_cast<int>(rows.size()), rows.front().width(), std::move(cells));
}

struct RowAtIndex {
    int row_index;
    RowState state;

    friend bool operator==(const RowAtIndex& a, const RowAtIndex& b) {
        return a.row_index == b.row_index && a.state == b.state;
    }
};

struct RowAtIndexHash {
    std::size_t operator()(const RowAtIndex& k) const {
        return RowStateHash{}(k.state) * 31 + static_cast<std::size_t>(k.row_index);
    }
};

class FixedHeightSearch {
public:
    FixedHeightSearch(const TilingInstance& instance, const SearchBudget& budget)
        : set_(instance.tile_set),
          seed_(instance.seed),
          h_(instance.height.rows),
          w_(instance.width),
          budget_(budget) {}

    SolveResult run() {
        SolveResult result;
        path_.reserve(h_);
        result.exists = extend(1, nullptr);
        if (result.exists) result.witness = tiling_from_rows(set_, path_);
        result.stats.rows_explored = nodes_;
        result.stats.states_memoized = dead_.size();
        return result;
    }

private:
    RowConstraints constraints_for(int row_index, const RowState* prev) const {
        RowConstraints c;
        if (row_index == 1) {
            c.top_white = true;
            c.first_tile = seed_;
        } else {
            c.required_top = bottom_colors(set_, *prev);
        }
        if (row_index == h_) c.bottom_white = true;
        return c;
    }

    bool extend(int row_index, const RowState* prev) {
        RowEnumerator stream(set_, w_, constraints_for(row_index, prev));
        while (auto row = stream.next()) {
            if (++nodes_ > budget_.max_nodes) throw BudgetExceeded(nodes_);
            if (row_index < h_ && dead_.count(RowAtIndex{row_index, *row})) continue;
            path_.push_back(*row);
            if (row_index == h_ || extend(row_index + 1, &path_.back())) return true;
            dead_.insert(RowAtIndex{row_index, std::move(*row)});
            path_.pop_back();
        }
        return false;
    }

    const TileSet& set_;
    const std::optional<TileType>& seed_;
    int h_;
    int w_;
    const SearchBudget& budget_;
    std::vector<RowState> path_;
    std::unordered_set<RowAtIndex, RowAtIndexHash> dead_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_fixed(const TilingInstance& instance, const SearchBudget& budget) {
    instance.check();
    if (!instance.height.is_fixed) {
        throw std::invalid_argument("solve_fixed requires a fixed-height instance");
    }
    return FixedHeightSearch(instance, budget).run();
}

SolveResult solve_arbitrary(const TilingInstance& instance, const SearchBudget& budget) {
    instance.check();
    if (instance.height.is_fixed) {
        throw std::invalid_argument("solve_arbitrary requires an arbitrary-height instance");
    }
    const TileSet& set = instance.tile_set;

    SolveResult result;
    std::uint64_t nodes = 0;
    std::unordered_map<RowState, std::optional<RowState>, RowStateHash> parent;
    std::vector<RowState> queue;  // BFS in generation order

    auto all_white_bottom = [&set](const RowState& row) {
        for (std::int32_t i : row.tiles) {
            if (!set[static_cast<std::size_t>(i)].bottom.is_white()) return false;
        }
        return true;
    };
    auto reconstruct = [&](const RowState& last) {
        std::vector<RowState> rows{last};
        for (auto cur = parent.at(last); cur; cur = parent.at(*cur)) rows.push_back(*cur);
        std::reverse(rows.begin(), rows.end());
        return tiling_from_rows(set, rows);
    };

    RowConstraints start;
    start.top_white = true;
    start.first_tile = instance.seed;
    RowEnumerator starts(set, instance.width, start);
    while (auto row = starts.next()) {
        if (++nodes > budget.max_nodes) throw BudgetExceeded(nodes);
        if (parent.count(*row)) continue;
        parent.emplace(*row, std::nullopt);
        if (all_white_bottom(*row)) {
            result.exists = true;
            result.witness = reconstruct(*row);
            break;
        }
        queue.push_back(std::move(*row));
    }

    for (std::size_t head = 0; head < queue.size() && !result.exists; ++head) {
        // queue grows during iteration; copy the frontier row since the vector
        // may reallocate while successors are streamed.
        const RowState current = queue[head];
        RowConstraints succ;
        succ.required_top = bottom_colors(set, current);
        RowEnumerator stream(set, instance.width, succ);
        while (auto row = stream.next()) {
            if (++nodes > budget.max_nodes) throw BudgetExceeded(nodes);
            if (parent.count(*row)) continue;
            parent.emplace(*row, current);
            if (all_white_bottom(*row)) {
                result.exists = true;
                result.witness = reconstruct(*row);
                break;
            }
            queue.push_back(std::move(*row));
        }
    }

    result.stats.rows_explored = nodes;
    result.stats.states_memoized = parent.size();
    return result;
}

SolveResult solve_seed_free(const TilingInstance& instance, const SearchBudget& budget) {
    if (instance.seed) {
        throw std::invalid_argument("solve_seed_free requires an instance without a seed");
    }
    return instance.height.is_fixed ? solve_fixed(instance, budget)
                                    : solve_arbitrary(instance, budget);
}

std::uint64_t expo(int k, std::uint64_t n) {
    if (k < 0) throw std::invalid_argument("expo: k must be nonnegative");
    std::uint64_t value = n;
    for (int i = 0; i < k; ++i) {
        if (value >= 64) {
            throw std::overflow_error("expo: 2^" + std::to_string(value) +
                                      " does not fit in 64 bits");
        }
        value = std::uint64_t{1} << value;
    }
    return value;
}

}  // namespace wang
