#include "support/oracles.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace oracles {

bool grid_valid(const wang::TilingInstance& instance, const std::vector<wang::TileType>& cells,
                int height) {
    const int w = instance.width;
    auto at = [&](int i, int j) -> const wang::TileType& {
        return cells[static_cast<std::size_t>(i - 1) * w + (j - 1)];
    };
    for (int i = 1; i <= height; ++i) {
        if (!at(i, 1).left.is_white()) return false;
        if (!at(i, w).right.is_white()) return false;
    }
    for (int j = 1; j <= w; ++j) {
        if (!at(1, j).top.is_white()) return false;
        if (!at(height, j).bottom.is_white()) return false;
    }
    for (int i = 1; i <= height; ++i) {
        for (int j = 1; j < w; ++j) {
            if (at(i, j).right != at(i, j + 1).left) return false;
        }
    }
    for (int i = 1; i < height; ++i) {
        for (int j = 1; j <= w; ++j) {
            if (at(i, j).bottom != at(i + 1, j).top) return false;
        }
    }
    if (instance.seed && !(at(1, 1) == *instance.seed)) return false;
    return true;
}

namespace {

bool odometer_exists_at(const wang::TilingInstance& instance, int height,
                        std::uint64_t space_limit) {
    const auto tiles = instance.tile_set.tiles();
    const std::size_t cells = static_cast<std::size_t>(height) * instance.width;
    if (tiles.empty()) return false;

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (space > space_limit / tiles.size()) {
            throw std::runtime_error("odometer oracle: space limit exceeded");
        }
        space *= tiles.size();
    }

    std::vector<std::size_t> digits(cells, 0);
    std::vector<wang::TileType> grid(cells, tiles[0]);
    while (true) {
        for (std::size_t i = 0; i < cells; ++i) grid[i] = tiles[digits[i]];
        if (grid_valid(instance, grid, height)) return true;
        std::size_t pos = cells;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < tiles.size()) break;
            digits[pos] = 0;
            if (pos == 0) return false;
        }
        if (pos == 0 && digits[0] == 0) return false;
    }
}

}  // namespace

bool odometer_exists(const wang::TilingInstance& instance, int height_cap,
                     std::uint64_t space_limit) {
    if (instance.height.is_fixed) {
        return odometer_exists_at(instance, instance.height.rows, space_limit);
    }
    for (int h = 1; h <= height_cap; ++h) {
        if (odometer_exists_at(instance, h, space_limit)) return true;
    }
    return false;
}

bool partition_exists(const wang::TileSet& set) {
    std::vector<wang::Color> colors = set.colors();
    bool has_white = false;
    for (wang::Color c : colors) has_white = has_white || c.is_white();
    if (!has_white) colors.push_back(wang::Color::white());
    if (colors.size() > 20) throw std::runtime_error("partition oracle: too many colors");

    const std::size_t k = colors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        auto in_two = [&](wang::Color c) {
            for (std::size_t i = 0; i < k; ++i) {
                if (colors[i] == c) return (mask >> i) & 1u;
            }
            throw std::logic_error("color not in universe");
        };
        if (in_two(wang::Color::white())) continue;

        bool ok = true;
        for (const wang::TileType& t : set.tiles()) {
            const bool top_one = !in_two(t.top);
            const bool bottom_two = in_two(t.bottom);
            if (top_one != bottom_two) {
                ok = false;
                break;
            }
        }
        const auto& tiles = set.tiles();
        for (std::size_t i = 0; ok && i < tiles.size(); ++i) {
            for (std::size_t j = i + 1; ok && j < tiles.size(); ++j) {
                if (tiles[i].left == tiles[j].left && tiles[i].top == tiles[j].top &&
                    !in_two(tiles[i].left) && !in_two(tiles[i].top)) {
                    ok = false;
                }
                if (tiles[i].right == tiles[j].right && tiles[i].top == tiles[j].top &&
                    in_two(tiles[i].right) && in_two(tiles[i].top)) {
                    ok = false;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

std::vector<std::vector<wang::TileType>> legal_rows(const wang::TilingInstance& instance,
                                                    const std::vector<wang::TileType>* frontier,
                                                    bool last_row) {
    const auto& tiles = instance.tile_set.tiles();
    const int w = instance.width;
    std::vector<std::vector<wang::TileType>> rows;
    if (tiles.empty()) return rows;

    std::vector<std::size_t> digits(static_cast<std::size_t>(w), 0);
    while (true) {
        std::vector<wang::TileType> row;
        for (std::size_t j = 0; j < digits.size(); ++j) row.push_back(tiles[digits[j]]);
        bool ok = row[0].left.is_white() && row[static_cast<std::size_t>(w - 1)].right.is_white();
        for (int j = 0; ok && j + 1 < w; ++j) {
            ok = row[static_cast<std::size_t>(j)].right == row[static_cast<std::size_t>(j + 1)].left;
        }
        for (int j = 0; ok && j < w; ++j) {
            const wang::TileType& t = row[static_cast<std::size_t>(j)];
            if (!frontier) {
                ok = t.top.is_white();
            } else {
                ok = t.top == (*frontier)[static_cast<std::size_t>(j)].bottom;
            }
            if (ok && last_row) ok = t.bottom.is_white();
        }
        if (ok && !frontier && instance.seed) ok = row[0] == *instance.seed;
        if (ok) rows.push_back(std::move(row));

        std::size_t pos = digits.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < tiles.size()) {
                done = false;
                break;
            }
            digits[pos] = 0;
        }
        if (done) break;
    }
    return rows;
}

bool minimax(const wang::TilingInstance& instance, const wang::ResolvedSequence& seq,
             std::int64_t placed, const std::vector<wang::TileType>* frontier) {
    const std::int64_t h = instance.height.rows;
    if (placed == h) return true;
    const wang::Player mover = seq.owner(placed + 1);
    const auto rows = legal_rows(instance, frontier, placed + 1 == h);
    if (rows.empty()) return false;
    for (const auto& row : rows) {
        const bool child = minimax(instance, seq, placed + 1, &row);
        if (mover == wang::Player::Exists && child) return true;
        if (mover == wang::Player::ForAll && !child) return false;
    }
    return mover == wang::Player::ForAll;
}

}  // namespace

bool game_minimax(const wang::TilingInstance& instance, const wang::ResolvedSequence& seq) {
    if (!instance.height.is_fixed) {
        throw std::invalid_argument("game_minimax handles fixed heights only");
    }
    return minimax(instance, seq, 0, nullptr);
}

bool bfs_reachable(const wang::DirectedGraph& g) {
    if (g.source == g.target) return true;
    std::vector<std::vector<int>> adjacent(g.nodes.size());
    for (const auto& [u, v] : g.edges) adjacent[static_cast<std::size_t>(u)].push_back(v);
    std::vector<bool> seen(g.nodes.size(), false);
    std::queue<int> queue;
    queue.push(g.source);
    seen[static_cast<std::size_t>(g.source)] = true;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (int v : adjacent[static_cast<std::size_t>(u)]) {
            if (v == g.target) return true;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                queue.push(v);
            }
        }
    }
    return false;
}

bool union_find_reachable(const wang::UndirectedGraph& g) {
    std::vector<int> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [a, b] : g.edges) {
        parent[static_cast<std::size_t>(find(a))] = find(b);
    }
    return find(g.source) == find(g.target);
}

bool tm_square_accepts(const wang::NormalizedTM& tm, const std::vector<std::string>& input,
                       int n) {
    if (n < 2 || static_cast<int>(input.size()) > n) return false;

    auto key = [](const wang::TMConfig& c, int depth) {
        std::string k = std::to_string(depth) + "|" + c.state + "|" + std::to_string(c.head);
        for (const std::string& s : c.tape) k += "|" + s;
        return k;
    };

    std::unordered_set<std::string> visited;
    std::queue<std::pair<wang::TMConfig, int>> queue;
    const wang::TMConfig start = wang::initial_config(tm, input, n);
    queue.emplace(start, 1);
    visited.insert(key(start, 1));
    const int target = n - 1;
    while (!queue.empty()) {
        auto [config, depth] = queue.front();
        queue.pop();
        if (depth == target) {
            bool erased = true;
            for (const std::string& s : config.tape) erased = erased && s == tm.desc.blank;
            if (erased && config.state == tm.final_copy) return true;
            continue;
        }
        for (wang::TMConfig& next : wang::successors(tm, config)) {
            const std::string k = key(next, depth + 1);
            if (visited.insert(k).second) queue.emplace(std::move(next), depth + 1);
        }
    }
    return false;
}

}  // namespace oracles
