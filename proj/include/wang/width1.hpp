#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wang/core.hpp"

namespace wang {

struct DirectedGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<int, int>> edges;  // indices into nodes
    int source = 0;
    int target = 0;

    int node_index(const std::string& name) const;  // -1 when absent
    int add_node(const std::string& name);          // idempotent
};

struct UndirectedGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<int, int>> edges;  // stored with first <= second
    int source = 0;
    int target = 0;

    int node_index(const std::string& name) const;
    int add_node(const std::string& name);
    void add_edge(int a, int b);
};

struct RotationCheck {
    bool closed = true;
    std::vector<TileType> missing;  // rotations absent from the set
};

// 180-degree rotation: left/right swapped, top/bottom swapped.
TileType rotate180(const TileType& t);
RotationCheck is_rotation_closed(const TileSet& set);

// Width-1 existence: a vertical chain of tiles from the seed (white top) to a
// white-bottom tile, bottoms matching tops. Width 1 makes constraint 1 bind
// both sides, so tiles without white left AND right never participate. For an
// arbitrary height the walk is cut off after |T|+1 steps; a longer chain
// repeats a tile, so nothing is lost.
bool solve_line(const TileSet& set, const TileType& seed, const HeightSpec& height);

// Directed s-t-reachability compiled to a width-1 instance: a seed with bottom
// s, an s-over-s pad, a t-over-white exit, one u-over-v tile per edge, and
// height 2 + |nodes|. Output size is linear in |nodes| + |edges|.
TilingInstance graph_to_tiles(const DirectedGraph& g);

// Layered undirected graph for a rotation-closed width-1 instance: a source,
// height copies of the tile set, a target. The source connects to white-top
// tiles of the first copy -- restricted to the seed tile when the instance has
// one -- and white-bottom tiles of the last copy connect to the target. Tiles
// without white left and right sides cannot occur in any width-1 tiling and
// are omitted. Rejects sets that are not rotation-closed.
UndirectedGraph tiles_to_graph(const TilingInstance& instance);

bool undirected_reachable(const UndirectedGraph& g);

// Text format shared by both graph kinds: "s <name>", "t <name>", then one
// "u v" pair per edge.
std::string digraph_to_text(const DirectedGraph& g);
DirectedGraph digraph_from_text(const std::string& text);
std::string ugraph_to_text(const UndirectedGraph& g);
UndirectedGraph ugraph_from_text(const std::string& text);

}  // namespace wang
