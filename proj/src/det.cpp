#include "wang/det.hpp"

#include <algorithm>
#include <map>

namespace wang {

ColorPartition::ColorPartition(std::vector<std::pair<Color, ColorClass>> entries)
    : list_(std::move(entries)) {
    for (const auto& [color, cls] : list_) map_[color.id()] = cls;
}

ColorClass ColorPartition::class_of(Color c) const {
    auto it = map_.find(c.id());
    if (it == map_.end()) {
        throw std::invalid_argument("partition does not cover color '" +
                                    std::string(c.name()) + "'");
    }
    return it->second;
}

std::vector<std::pair<Color, ColorClass>> ColorPartition::entries() const {
    std::vector<std::pair<Color, ColorClass>> out = list_;
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

std::string class_name(ColorClass c) { return c == ColorClass::One ? "ONE" : "TWO"; }

// 2-SAT instance over one boolean per color, where "true" means class Two.
// Clause sources are kept so an unsatisfiable core can be rendered as a
// readable forcing chain.
struct TwoSat {
    struct Edge {
        int to;
        int source;  // index into clause_text
    };

    int vars = 0;
    std::vector<std::vector<Edge>> implications;  // node = 2*var + (1 if positive literal)
    std::vector<std::string> clause_text;

    void init(int n) {
        vars = n;
        implications.assign(2 * n, {});
    }

    static int node(int var, bool value) { return 2 * var + (value ? 1 : 0); }

    // (a = va) or (b = vb)
    void add_clause(int a, bool va, int b, bool vb, std::string text) {
        const int source = static_cast<int>(clause_text.size());
        clause_text.push_back(std::move(text));
        implications[node(a, !va)].push_back({node(b, vb), source});
        implications[node(b, !vb)].push_back({node(a, va), source});
    }
};

// Iterative Tarjan SCC; component ids come out in reverse topological order.
std::vector<int> tarjan_scc(const std::vector<std::vector<TwoSat::Edge>>& graph) {
    const int n = static_cast<int>(graph.size());
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, comps = 0;
    std::vector<bool> on_stack(n, false);

    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge_idx] = call.back();
            if (edge_idx == 0) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (edge_idx < graph[v].size()) {
                const int to = graph[v][edge_idx++].to;
                if (num[to] == -1) {
                    call.emplace_back(to, 0);
                } else if (on_stack[to]) {
                    low[v] = std::min(low[v], num[to]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                const int child = v;
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().first] = std::min(low[call.back().first], low[child]);
                }
            }
        }
    }
    return comp;
}

// Shortest implication path inside one strongly connected component, used to
// narrate why a color is forced into both classes.
std::vector<std::pair<int, int>> implication_path(const TwoSat& sat, const std::vector<int>& comp,
                                                  int from, int to) {
    std::vector<int> prev_node(sat.implications.size(), -1);
    std::vector<int> prev_source(sat.implications.size(), -1);
    std::vector<int> queue{from};
    prev_node[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (v == to && head > 0) break;
        for (const auto& edge : sat.implications[v]) {
            if (comp[edge.to] != comp[from] || prev_node[edge.to] != -1) continue;
            prev_node[edge.to] = v;
            prev_source[edge.to] = edge.source;
            queue.push_back(edge.to);
        }
    }
    std::vector<std::pair<int, int>> path;  // (node, source that led to it)
    if (prev_node[to] == -1) return path;
    for (int v = to; v != from; v = prev_node[v]) path.emplace_back(v, prev_source[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

struct KeyedGroup {
    Color key_side;
    Color key_top;
    std::vector<int> tiles;
};

std::vector<KeyedGroup> collision_groups(const TileSet& set, bool by_left) {
    std::map<std::pair<std::string, std::string>, KeyedGroup> groups;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const TileType& t = set[i];
        const Color side = by_left ? t.left : t.right;
        auto key = std::make_pair(std::string(side.name()), std::string(t.top.name()));
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            it->second.key_side = side;
            it->second.key_top = t.top;
        }
        it->second.tiles.push_back(static_cast<int>(i));
    }
    std::vector<KeyedGroup> out;
    for (auto& [key, group] : groups) {
        if (group.tiles.size() >= 2) out.push_back(std::move(group));
    }
    return out;
}

}  // namespace

DeterminismCertificate detect_deterministic(const TileSet& set) {
    DeterminismCertificate cert;

    // Immediate bullet-1 contradiction: a tile whose top equals its bottom can
    // never split them into different classes. Reported first because it is
    // the smallest possible counterexample.
    for (std::size_t i = 0; i < set.size(); ++i) {
        const TileType& t = set[i];
        if (t.top == t.bottom) {
            DetObstruction obs;
            obs.summary = "tile #" + std::to_string(i) + " " + to_string(t) +
                          " has top = bottom = '" + std::string(t.top.name()) +
                          "', but every tile must have its top and bottom in different classes";
            obs.steps.push_back(obs.summary);
            obs.colors.push_back(t.top);
            cert.counterexample = std::move(obs);
            return cert;
        }
    }

    // Variable universe: the set's colors plus white.
    std::vector<Color> colors = set.colors();
    if (std::find(colors.begin(), colors.end(), Color::white()) == colors.end()) {
        colors.push_back(Color::white());
    }
    std::unordered_map<std::uint32_t, int> var_of;
    for (std::size_t i = 0; i < colors.size(); ++i) var_of[colors[i].id()] = static_cast<int>(i);

    TwoSat sat;
    sat.init(static_cast<int>(colors.size()));
    std::vector<bool> constrained(colors.size(), false);
    auto var = [&](Color c) { return var_of.at(c.id()); };
    auto touch = [&](Color c) { constrained[static_cast<std::size_t>(var(c))] = true; };

    // white is in class One.
    sat.add_clause(var(Color::white()), false, var(Color::white()), false,
                   "white belongs to class ONE by definition");
    touch(Color::white());

    // Bullet 1: top and bottom classes differ, per tile.
    for (std::size_t i = 0; i < set.size(); ++i) {
        const TileType& t = set[i];
        const std::string text = "tile #" + std::to_string(i) + " " + to_string(t) +
                                 " forces class(" + std::string(t.top.name()) +
                                 ") != class(" + std::string(t.bottom.name()) + ")";
        sat.add_clause(var(t.top), true, var(t.bottom), true, text);
        sat.add_clause(var(t.top), false, var(t.bottom), false, text);
        touch(t.top);
        touch(t.bottom);
    }

    // Bullet 2: a (left, top) collision may not have both key colors in One.
    for (const KeyedGroup& g : collision_groups(set, /*by_left=*/true)) {
        const std::string text =
            "tiles #" + std::to_string(g.tiles[0]) + " and #" + std::to_string(g.tiles[1]) +
            " share left='" + std::string(g.key_side.name()) + "', top='" +
            std::string(g.key_top.name()) + "', so those colors cannot both be in ONE";
        sat.add_clause(var(g.key_side), true, var(g.key_top), true, text);
        touch(g.key_side);
        touch(g.key_top);
    }

    // Bullet 3: a (right, top) collision may not have both key colors in Two.
    for (const KeyedGroup& g : collision_groups(set, /*by_left=*/false)) {
        const std::string text =
            "tiles #" + std::to_string(g.tiles[0]) + " and #" + std::to_string(g.tiles[1]) +
            " share right='" + std::string(g.key_side.name()) + "', top='" +
            std::string(g.key_top.name()) + "', so those colors cannot both be in TWO";
        sat.add_clause(var(g.key_side), false, var(g.key_top), false, text);
        touch(g.key_side);
        touch(g.key_top);
    }

    const std::vector<int> comp = tarjan_scc(sat.implications);

    for (std::size_t v = 0; v < colors.size(); ++v) {
        const int pos = TwoSat::node(static_cast<int>(v), true);
        const int neg = TwoSat::node(static_cast<int>(v), false);
        if (comp[pos] != comp[neg]) continue;

        DetObstruction obs;
        obs.summary = "color '" + std::string(colors[v].name()) +
                      "' is forced into both classes";
        obs.colors.push_back(colors[v]);
        auto narrate = [&](int from, int to, const char* head) {
            obs.steps.emplace_back(head);
            for (const auto& [node, source] : implication_path(sat, comp, from, to)) {
                const Color c = colors[static_cast<std::size_t>(node / 2)];
                obs.steps.push_back("  => class(" + std::string(c.name()) + ") = " +
                                    class_name(node % 2 ? ColorClass::Two : ColorClass::One) +
                                    "  [" + sat.clause_text[static_cast<std::size_t>(source)] +
                                    "]");
            }
        };
        narrate(pos, neg, ("assume class(" + std::string(colors[v].name()) + ") = TWO").c_str());
        narrate(neg, pos, ("assume class(" + std::string(colors[v].name()) + ") = ONE").c_str());
        for (const KeyedGroup& g : collision_groups(set, true)) {
            if (g.key_side == colors[v] || g.key_top == colors[v]) {
                obs.colliding_tiles = std::make_pair(g.tiles[0], g.tiles[1]);
                break;
            }
        }
        cert.counterexample = std::move(obs);
        return cert;
    }

    // Satisfiable: extract the assignment, then send every unconstrained color
    // to One (any class works for them; One is canonical).
    std::vector<std::pair<Color, ColorClass>> entries;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        ColorClass cls;
        if (!constrained[v]) {
            cls = ColorClass::One;
        } else {
            const bool is_two = comp[TwoSat::node(static_cast<int>(v), true)] <
                                comp[TwoSat::node(static_cast<int>(v), false)];
            cls = is_two ? ColorClass::Two : ColorClass::One;
        }
        entries.emplace_back(colors[v], cls);
    }
    ColorPartition partition(entries);
    if (auto failure = check_partition(set, partition)) {
        throw std::logic_error("determinism detector produced an invalid partition: " +
                               *failure);
    }
    cert.deterministic = true;
    cert.partition = std::move(partition);
    return cert;
}

std::optional<std::string> check_partition(const TileSet& set, const ColorPartition& partition) {
    if (partition.class_of(Color::white()) != ColorClass::One) {
        return "white is not in class ONE";
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        const TileType& t = set[i];
        const bool top_one = partition.class_of(t.top) == ColorClass::One;
        const bool bottom_two = partition.class_of(t.bottom) == ColorClass::Two;
        if (top_one != bottom_two) {
            return "tile #" + std::to_string(i) + " violates the top/bottom class flip";
        }
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const TileType& a = set[i];
            const TileType& b = set[j];
            if (a.left == b.left && a.top == b.top &&
                partition.class_of(a.left) == ColorClass::One &&
                partition.class_of(a.top) == ColorClass::One) {
                return "tiles #" + std::to_string(i) + " and #" + std::to_string(j) +
                       " collide on a class-ONE (left, top) key";
            }
            if (a.right == b.right && a.top == b.top &&
                partition.class_of(a.right) == ColorClass::Two &&
                partition.class_of(a.top) == ColorClass::Two) {
                return "tiles #" + std::to_string(i) + " and #" + std::to_string(j) +
                       " collide on a class-TWO (right, top) key";
            }
        }
    }
    return std::nullopt;
}

CompletionResult boustrophedon_complete(const TileSet& set,
                                        const DeterminismCertificate& certificate,
                                        const TileType& seed, int height, int width) {
    if (!certificate.deterministic || !certificate.partition) {
        throw std::invalid_argument("boustrophedon_complete requires a deterministic certificate");
    }
    if (!set.contains(seed)) throw std::invalid_argument("seed tile is not in the tile set");
    if (height < 1 || width < 1) throw std::invalid_argument("rectangle must be at least 1x1");

    const ColorPartition& partition = *certificate.partition;
    std::vector<TileType> cells(static_cast<std::size_t>(height) * width);
    auto idx = [width](int i, int j) {
        return static_cast<std::size_t>(i - 1) * width + (j - 1);
    };

    CompletionResult out;
    std::uint64_t visited = 0;

    for (int i = 1; i <= height; ++i) {
        const bool left_to_right = (i % 2 == 1);
        for (int step = 0; step < width; ++step) {
            const int j = left_to_right ? step + 1 : width - step;
            ++visited;

            std::optional<Color> need_left, need_top, need_right, need_bottom;
            need_top = (i == 1) ? Color::white() : cells[idx(i - 1, j)].bottom;
            if (j == 1) {
                need_left = Color::white();
            } else if (left_to_right) {
                need_left = cells[idx(i, j - 1)].right;
            }
            if (j == width) {
                need_right = Color::white();
            } else if (!left_to_right) {
                need_right = cells[idx(i, j + 1)].left;
            }
            if (i == height) need_bottom = Color::white();

            std::vector<int> candidates;
            for (std::size_t k = 0; k < set.size(); ++k) {
                const TileType& t = set[k];
                if (need_left && t.left != *need_left) continue;
                if (need_top && t.top != *need_top) continue;
                if (need_right && t.right != *need_right) continue;
                if (need_bottom && t.bottom != *need_bottom) continue;
                if (i == 1 && j == 1 && !(t == seed)) continue;
                candidates.push_back(static_cast<int>(k));
            }

            int chosen = -1;
            if (candidates.size() == 1) {
                chosen = candidates[0];
            } else if (candidates.size() >= 2) {
                // Continue/close fork: keep the single continuing candidate
                // before the last row; the last row already required white.
                std::vector<int> continuing;
                for (int k : candidates) {
                    if (!set[static_cast<std::size_t>(k)].bottom.is_white()) {
                        continuing.push_back(k);
                    }
                }
                if (i < height && continuing.size() == 1 &&
                    continuing.size() < candidates.size()) {
                    chosen = continuing[0];
                } else {
                    std::string what = "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") admits " + std::to_string(candidates.size()) +
                                       " candidates:";
                    for (int k : candidates) {
                        what += " #" + std::to_string(k) +
                                to_string(set[static_cast<std::size_t>(k)]);
                    }
                    const Color key = left_to_right ? *need_left : *need_right;
                    const ColorClass want = left_to_right ? ColorClass::One : ColorClass::Two;
                    if (partition.class_of(key) != want) {
                        what += "; keyed neighbor color '" + std::string(key.name()) +
                                "' lies outside the class required by the definition";
                    }
                    throw RuntimeNondeterminism(Cell{i, j}, what);
                }
            }

            if (chosen < 0) {
                out.stuck_at = Cell{i, j};
                out.result.exists = false;
                out.result.stats.rows_explored = visited;
                return out;
            }
            cells[idx(i, j)] = set[static_cast<std::size_t>(chosen)];
        }
    }

    Tiling tiling(height, width, std::move(cells));

    // Parity consequence of the top/bottom flip: row i tops are all in class
    // One exactly when i is odd. A violation here means the detector and the
    // fill disagree, which must surface loudly.
    for (int i = 1; i <= height; ++i) {
        const ColorClass want = (i % 2 == 1) ? ColorClass::One : ColorClass::Two;
        for (int j = 1; j <= width; ++j) {
            if (partition.class_of(tiling.at(i, j).top) != want) {
                throw std::logic_error("row parity invariant violated at row " +
                                       std::to_string(i));
            }
        }
    }

    out.result.exists = true;
    out.result.witness = std::move(tiling);
    out.result.stats.rows_explored = visited;
    return out;
}

}  // namespace wang
