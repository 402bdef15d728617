#include "wang/core.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace wang {

namespace {

struct ColorRegistry {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string_view, std::uint32_t> ids;

    ColorRegistry() {
        names.reserve(64);
        names.emplace_back("white");
        ids.emplace(names.back(), 0u);
    }

    static ColorRegistry& get() {
        static ColorRegistry registry;
        return registry;
    }
};

}  // namespace

Color Color::intern(std::string_view name) {
    ColorRegistry& reg = ColorRegistry::get();
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.ids.find(name);
    if (it != reg.ids.end()) return Color(it->second);
    reg.names.emplace_back(name);
    std::uint32_t id = static_cast<std::uint32_t>(reg.names.size() - 1);
    reg.ids.emplace(reg.names.back(), id);
    return Color(id);
}

std::string_view Color::name() const {
    ColorRegistry& reg = ColorRegistry::get();
    std::lock_guard<std::mutex> lock(reg.mutex);
    return reg.names[id_];
}

bool operator<(const TileType& a, const TileType& b) {
    auto key = [](const TileType& t) {
        return std::make_tuple(t.left.name(), t.top.name(), t.right.name(), t.bottom.name());
    };
    return key(a) < key(b);
}

std::size_t TileTypeHash::operator()(const TileType& t) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : {t.left.id(), t.top.id(), t.right.id(), t.bottom.id()}) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_string(const TileType& t) {
    std::string out = "<";
    out += t.left.name();
    out += ",";
    out += t.top.name();
    out += ",";
    out += t.right.name();
    out += ",";
    out += t.bottom.name();
    out += ">";
    return out;
}

TileSet::TileSet(std::vector<TileType> tiles) {
    std::unordered_map<TileType, int, TileTypeHash> seen;
    std::unordered_map<std::uint32_t, bool> color_seen;
    for (const TileType& t : tiles) {
        if (seen.emplace(t, static_cast<int>(tiles_.size())).second) {
            tiles_.push_back(t);
            for (Color c : {t.left, t.top, t.right, t.bottom}) {
                if (!color_seen[c.id()]) {
                    color_seen[c.id()] = true;
                    colors_.push_back(c);
                }
            }
        }
    }
}

std::optional<int> TileSet::index_of(const TileType& t) const {
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        if (tiles_[i] == t) return static_cast<int>(i);
    }
    return std::nullopt;
}

Tiling::Tiling(int height, int width, std::vector<TileType> cells)
    : height_(height), width_(width), cells_(std::move(cells)) {
    if (height < 1 || width < 1) {
        throw std::invalid_argument("tiling dimensions must be at least 1x1");
    }
    if (cells_.size() != static_cast<std::size_t>(height) * width) {
        throw std::invalid_argument("tiling cell count does not match dimensions");
    }
}

HeightSpec HeightSpec::fixed(int rows) {
    if (rows < 1) throw std::invalid_argument("fixed height must be >= 1");
    return HeightSpec{true, rows};
}

void TilingInstance::check() const {
    if (width < 1) throw std::invalid_argument("instance width must be >= 1");
    if (height.is_fixed && height.rows < 1) {
        throw std::invalid_argument("instance fixed height must be >= 1");
    }
    if (n < 0) throw std::invalid_argument("instance n must be nonnegative");
    if (seed && !tile_set.contains(*seed)) {
        throw std::invalid_argument("seed tile is not in the tile set");
    }
}

ValidityReport validate_tiling(const TileSet& tile_set, const Tiling& tiling,
                               const std::optional<TileType>& seed) {
    const int h = tiling.height();
    const int w = tiling.width();

    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            if (!tile_set.contains(tiling.at(i, j))) {
                throw std::invalid_argument("cell (" + std::to_string(i) + "," +
                                            std::to_string(j) +
                                            ") references a tile outside the tile set");
            }
        }
    }

    ValidityReport report;
    auto violation = [&report](int constraint, int i, int j, std::string msg) {
        report.valid = false;
        report.violations.push_back(Violation{constraint, i, j, std::move(msg)});
    };

    for (int i = 1; i <= h; ++i) {
        if (!tiling.at(i, 1).left.is_white()) {
            violation(1, i, 1, "left border is not white");
        }
        if (!tiling.at(i, w).right.is_white()) {
            violation(1, i, w, "right border is not white");
        }
    }
    for (int j = 1; j <= w; ++j) {
        if (!tiling.at(1, j).top.is_white()) {
            violation(2, 1, j, "top border is not white");
        }
        if (!tiling.at(h, j).bottom.is_white()) {
            violation(2, h, j, "bottom border is not white");
        }
    }
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j + 1 <= w; ++j) {
            if (tiling.at(i, j).right != tiling.at(i, j + 1).left) {
                violation(3, i, j, "horizontal mismatch with cell to the right");
            }
        }
    }
    for (int i = 1; i + 1 <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            if (tiling.at(i, j).bottom != tiling.at(i + 1, j).top) {
                violation(4, i, j, "vertical mismatch with cell below");
            }
        }
    }
    if (seed && !(tiling.at(1, 1) == *seed)) {
        violation(0, 1, 1, "cell (1,1) is not the seed tile");
    }
    return report;
}

namespace {

// Depth-first assignment of cells in row-major order. Candidates are checked
// against every constraint decidable from the cells placed so far, so the
// search is exhaustive yet prunes dead prefixes; visiting tiles in set order
// keeps the first solution lexicographically first.
class CellSearch {
public:
    CellSearch(const TilingInstance& instance, int height, const SearchBudget& budget,
               std::uint64_t& nodes)
        : tiles_(instance.tile_set.tiles()),
          seed_(instance.seed),
          h_(height),
          w_(instance.width),
          budget_(budget),
          nodes_(nodes),
          cells_(static_cast<std::size_t>(height) * instance.width) {}

    std::optional<Tiling> run() {
        if (fill(0)) return Tiling(h_, w_, cells_);
        return std::nullopt;
    }

private:
    bool admissible(int idx, const TileType& t) const {
        const int i = idx / w_ + 1;
        const int j = idx % w_ + 1;
        if (j == 1 && !t.left.is_white()) return false;
        if (j == w_ && !t.right.is_white()) return false;
        if (i == 1 && !t.top.is_white()) return false;
        if (i == h_ && !t.bottom.is_white()) return false;
        if (i == 1 && j == 1 && seed_ && !(t == *seed_)) return false;
        if (j > 1 && cells_[idx - 1].right != t.left) return false;
        if (i > 1 && cells_[idx - w_].bottom != t.top) return false;
        return true;
    }

    bool fill(int idx) {
        if (idx == h_ * w_) return true;
        for (const TileType& t : tiles_) {
            if (++nodes_ > budget_.max_nodes) throw BudgetExceeded(nodes_);
            if (!admissible(idx, t)) continue;
            cells_[idx] = t;
            if (fill(idx + 1)) return true;
        }
        return false;
    }

    const std::vector<TileType>& tiles_;
    const std::optional<TileType>& seed_;
    int h_;
    int w_;
    const SearchBudget& budget_;
    std::uint64_t& nodes_;
    std::vector<TileType> cells_;
};

}  // namespace

BruteForceResult brute_force_exists(const TilingInstance& instance, int height_cap,
                                    const SearchBudget& budget) {
    instance.check();
    BruteForceResult result;
    if (instance.height.is_fixed) {
        CellSearch search(instance, instance.height.rows, budget, result.nodes_explored);
        result.witness = search.run();
    } else {
        if (height_cap < 1) throw std::invalid_argument("height_cap must be >= 1");
        for (int h = 1; h <= height_cap && !result.witness; ++h) {
            CellSearch search(instance, h, budget, result.nodes_explored);
            result.witness = search.run();
        }
    }
    result.exists = result.witness.has_value();
    return result;
}

}  // namespace wang
