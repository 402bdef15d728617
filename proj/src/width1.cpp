#include "wang/width1.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wang {

namespace {

int find_node(const std::vector<std::string>& nodes, const std::string& name) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == name) return static_cast<int>(i);
    }
    return -1;
}

void check_node_name(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("graph node name must be nonempty");
    if (name == "white") {
        throw std::invalid_argument("graph node name 'white' would collide with the border color");
    }
    if (name.find_first_of(" \t") != std::string::npos) {
        throw std::invalid_argument("graph node name may not contain whitespace: '" + name + "'");
    }
}

bool white_sided(const TileType& t) { return t.left.is_white() && t.right.is_white(); }

}  // namespace

int DirectedGraph::node_index(const std::string& name) const { return find_node(nodes, name); }

int DirectedGraph::add_node(const std::string& name) {
    int i = node_index(name);
    if (i >= 0) return i;
    check_node_name(name);
    nodes.push_back(name);
    return static_cast<int>(nodes.size()) - 1;
}

int UndirectedGraph::node_index(const std::string& name) const { return find_node(nodes, name); }

int UndirectedGraph::add_node(const std::string& name) {
    int i = node_index(name);
    if (i >= 0) return i;
    check_node_name(name);
    nodes.push_back(name);
    return static_cast<int>(nodes.size()) - 1;
}

void UndirectedGraph::add_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) == edges.end()) {
        edges.emplace_back(a, b);
    }
}

TileType rotate180(const TileType& t) { return TileType{t.right, t.bottom, t.left, t.top}; }

RotationCheck is_rotation_closed(const TileSet& set) {
    RotationCheck check;
    for (const TileType& t : set.tiles()) {
        const TileType rotated = rotate180(t);
        if (!set.contains(rotated)) {
            check.closed = false;
            check.missing.push_back(rotated);
        }
    }
    return check;
}

bool solve_line(const TileSet& set, const TileType& seed, const HeightSpec& height) {
    if (!set.contains(seed)) throw std::invalid_argument("seed tile is not in the tile set");
    if (!white_sided(seed) || !seed.top.is_white()) return false;

    if (height.is_fixed) {
        const int n = height.rows;
        // reachable[k] = tiles usable as row k+1 of the chain.
        std::unordered_set<int> current;
        if (auto i = set.index_of(seed)) current.insert(*i);
        for (int row = 1; row < n; ++row) {
            std::unordered_set<int> next;
            for (int u : current) {
                const Color below = set[static_cast<std::size_t>(u)].bottom;
                for (std::size_t v = 0; v < set.size(); ++v) {
                    if (white_sided(set[v]) && set[v].top == below) {
                        next.insert(static_cast<int>(v));
                    }
                }
            }
            current = std::move(next);
            if (current.empty()) return false;
        }
        for (int u : current) {
            if (set[static_cast<std::size_t>(u)].bottom.is_white()) return true;
        }
        return false;
    }

    // Arbitrary height: breadth-first over tiles; a chain longer than |T|+1
    // repeats a tile, so the frontier stabilizes within |T| expansions.
    std::unordered_set<int> seen;
    std::vector<int> queue;
    if (auto i = set.index_of(seed)) {
        seen.insert(*i);
        queue.push_back(*i);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const TileType& t = set[static_cast<std::size_t>(queue[head])];
        if (t.bottom.is_white()) return true;
        for (std::size_t v = 0; v < set.size(); ++v) {
            if (!white_sided(set[v]) || set[v].top != t.bottom) continue;
            if (seen.insert(static_cast<int>(v)).second) queue.push_back(static_cast<int>(v));
        }
    }
    return false;
}

TilingInstance graph_to_tiles(const DirectedGraph& g) {
    if (g.nodes.empty()) throw std::invalid_argument("graph has no nodes");
    const Color white = Color::white();
    auto color = [&](int node) { return Color::intern(g.nodes[static_cast<std::size_t>(node)]); };

    std::vector<TileType> tiles;
    const TileType seed{white, white, white, color(g.source)};
    tiles.push_back(seed);
    tiles.push_back(TileType{white, color(g.source), white, color(g.source)});
    tiles.push_back(TileType{white, color(g.target), white, white});
    for (const auto& [u, v] : g.edges) {
        tiles.push_back(TileType{white, color(u), white, color(v)});
    }

    TilingInstance instance;
    instance.tile_set = TileSet(std::move(tiles));
    instance.seed = seed;
    instance.width = 1;
    instance.n = 2 + static_cast<std::int64_t>(g.nodes.size());
    instance.height = HeightSpec::fixed(2 + static_cast<int>(g.nodes.size()));
    return instance;
}

UndirectedGraph tiles_to_graph(const TilingInstance& instance) {
    instance.check();
    if (instance.width != 1) {
        throw std::invalid_argument("tiles_to_graph requires a width-1 instance");
    }
    if (!instance.height.is_fixed) {
        throw std::invalid_argument("tiles_to_graph requires a fixed height");
    }
    const RotationCheck rotation = is_rotation_closed(instance.tile_set);
    if (!rotation.closed) {
        std::string what = "tile set is not rotation-closed; missing:";
        for (const TileType& t : rotation.missing) what += " " + to_string(t);
        throw std::invalid_argument(what);
    }

    const TileSet& set = instance.tile_set;
    const int n = instance.height.rows;

    UndirectedGraph g;
    g.source = g.add_node("source");
    g.target = g.add_node("target");
    // Node ids for layer copies; -1 marks tiles that cannot occur at width 1.
    std::vector<std::vector<int>> layer_node(static_cast<std::size_t>(n),
                                             std::vector<int>(set.size(), -1));
    for (int layer = 1; layer <= n; ++layer) {
        for (std::size_t t = 0; t < set.size(); ++t) {
            if (!white_sided(set[t])) continue;
            layer_node[static_cast<std::size_t>(layer - 1)][t] =
                g.add_node("(" + std::to_string(t) + "," + std::to_string(layer) + ")");
        }
    }

    for (std::size_t t = 0; t < set.size(); ++t) {
        const int node = layer_node[0][t];
        if (node < 0 || !set[t].top.is_white()) continue;
        if (instance.seed && !(set[t] == *instance.seed)) continue;
        g.add_edge(g.source, node);
    }
    for (int layer = 1; layer < n; ++layer) {
        for (std::size_t u = 0; u < set.size(); ++u) {
            const int un = layer_node[static_cast<std::size_t>(layer - 1)][u];
            if (un < 0) continue;
            for (std::size_t v = 0; v < set.size(); ++v) {
                const int vn = layer_node[static_cast<std::size_t>(layer)][v];
                if (vn < 0 || set[u].bottom != set[v].top) continue;
                g.add_edge(un, vn);
            }
        }
    }
    for (std::size_t t = 0; t < set.size(); ++t) {
        const int node = layer_node[static_cast<std::size_t>(n - 1)][t];
        if (node < 0 || !set[t].bottom.is_white()) continue;
        g.add_edge(node, g.target);
    }
    return g;
}

bool undirected_reachable(const UndirectedGraph& g) {
    if (g.source == g.target) return true;
    std::vector<std::vector<int>> adjacent(g.nodes.size());
    for (const auto& [a, b] : g.edges) {
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(g.nodes.size(), false);
    std::vector<int> queue{g.source};
    seen[static_cast<std::size_t>(g.source)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int next : adjacent[static_cast<std::size_t>(queue[head])]) {
            if (seen[static_cast<std::size_t>(next)]) continue;
            if (next == g.target) return true;
            seen[static_cast<std::size_t>(next)] = true;
            queue.push_back(next);
        }
    }
    return false;
}

namespace {

template <typename Graph>
std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "s " << g.nodes[static_cast<std::size_t>(g.source)] << "\n";
    out << "t " << g.nodes[static_cast<std::size_t>(g.target)] << "\n";
    for (const auto& [u, v] : g.edges) {
        out << g.nodes[static_cast<std::size_t>(u)] << " "
            << g.nodes[static_cast<std::size_t>(v)] << "\n";
    }
    return out.str();
}

template <typename Graph>
Graph graph_from_text(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_s = false, have_t = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) +
                                        " must have exactly two fields");
        }
        if (!have_s) {
            if (a != "s") throw std::invalid_argument("graph must start with an 's <name>' line");
            g.source = g.add_node(b);
            have_s = true;
        } else if (!have_t) {
            if (a != "t") throw std::invalid_argument("second graph line must be 't <name>'");
            g.target = g.add_node(b);
            have_t = true;
        } else {
            const int u = g.add_node(a);
            const int v = g.add_node(b);
            if constexpr (std::is_same_v<Graph, UndirectedGraph>) {
                g.add_edge(u, v);
            } else {
                g.edges.emplace_back(u, v);
            }
        }
    }
    if (!have_s || !have_t) throw std::invalid_argument("graph needs 's' and 't' lines");
    return g;
}

}  // namespace

std::string digraph_to_text(const DirectedGraph& g) { return graph_to_text(g); }
DirectedGraph digraph_from_text(const std::string& text) {
    return graph_from_text<DirectedGraph>(text);
}
std::string ugraph_to_text(const UndirectedGraph& g) { return graph_to_text(g); }
UndirectedGraph ugraph_from_text(const std::string& text) {
    return graph_from_text<UndirectedGraph>(text);
}

}  // namespace wang
