#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wang/core.hpp"
#include "wang/tmred.hpp"
#include "wang/width1.hpp"

namespace fixtures {

// The bordered 3x3 example set: nine distinct tiles over green/red/yellow
// with a white-cornered seed, solvable exactly one way.
wang::TileSet figure_set();
wang::TileType figure_seed();
wang::Tiling figure_solution();
wang::TilingInstance figure_instance();

// Every tile set of 1..max_tiles tiles drawn from the universe of all tiles
// over {white} + the given colors, visited in a fixed order.
void for_each_tile_set(const std::vector<std::string>& non_white_colors, int max_tiles,
                       const std::function<void(const wang::TileSet&)>& fn);

// Uniform random tile over the given color universe (white included).
wang::TileType random_tile(std::mt19937& rng, const std::vector<wang::Color>& colors);
wang::TileSet random_tile_set(std::mt19937& rng, int tiles,
                              const std::vector<std::string>& non_white_colors);

wang::DirectedGraph random_digraph(std::mt19937& rng, int max_nodes);

struct TmFixture {
    std::string name;
    std::string text;
    std::vector<std::string> inputs;  // words over single-character symbols
    bool deterministic;
};

// At least ten normalized machines with assorted behaviors: immediate and
// delayed acceptance, rejection by sticking, by running forever, by falling
// off either tape end, dirty-tape acceptance attempts, and nondeterminism.
const std::vector<TmFixture>& tm_corpus();

// The machine whose first four configurations on input bba match the worked
// encoding example.
const TmFixture& fig4_fixture();

wang::NormalizedTM load_fixture(const TmFixture& fixture);

}  // namespace fixtures
