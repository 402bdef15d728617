#include "support/fixtures.hpp"

#include <stdexcept>

namespace fixtures {

namespace {

wang::TileType tile(const char* l, const char* t, const char* r, const char* b) {
    return wang::TileType{wang::Color::intern(l), wang::Color::intern(t),
                          wang::Color::intern(r), wang::Color::intern(b)};
}

}  // namespace

wang::TileSet figure_set() {
    return wang::TileSet({
        tile("white", "white", "green", "red"),
        tile("green", "white", "green", "yellow"),
        tile("green", "white", "white", "yellow"),
        tile("white", "red", "red", "red"),
        tile("red", "yellow", "red", "green"),
        tile("red", "yellow", "white", "yellow"),
        tile("white", "red", "green", "white"),
        tile("green", "green", "red", "white"),
        tile("red", "yellow", "white", "white"),
    });
}

wang::TileType figure_seed() { return tile("white", "white", "green", "red"); }

wang::Tiling figure_solution() {
    const wang::TileSet set = figure_set();
    std::vector<wang::TileType> cells(set.tiles().begin(), set.tiles().end());
    return wang::Tiling(3, 3, std::move(cells));
}

wang::TilingInstance figure_instance() {
    wang::TilingInstance instance;
    instance.tile_set = figure_set();
    instance.seed = figure_seed();
    instance.width = 3;
    instance.height = wang::HeightSpec::fixed(3);
    instance.n = 3;
    return instance;
}

void for_each_tile_set(const std::vector<std::string>& non_white_colors, int max_tiles,
                       const std::function<void(const wang::TileSet&)>& fn) {
    std::vector<wang::Color> colors{wang::Color::white()};
    for (const std::string& name : non_white_colors) colors.push_back(wang::Color::intern(name));

    std::vector<wang::TileType> universe;
    for (wang::Color l : colors) {
        for (wang::Color t : colors) {
            for (wang::Color r : colors) {
                for (wang::Color b : colors) universe.push_back(wang::TileType{l, t, r, b});
            }
        }
    }

    std::vector<int> pick;
    std::function<void(std::size_t)> descend = [&](std::size_t from) {
        if (!pick.empty()) {
            std::vector<wang::TileType> tiles;
            for (int i : pick) tiles.push_back(universe[static_cast<std::size_t>(i)]);
            fn(wang::TileSet(std::move(tiles)));
        }
        if (static_cast<int>(pick.size()) == max_tiles) return;
        for (std::size_t i = from; i < universe.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            descend(i + 1);
            pick.pop_back();
        }
    };
    descend(0);
}

wang::TileType random_tile(std::mt19937& rng, const std::vector<wang::Color>& colors) {
    std::uniform_int_distribution<std::size_t> pick(0, colors.size() - 1);
    return wang::TileType{colors[pick(rng)], colors[pick(rng)], colors[pick(rng)],
                          colors[pick(rng)]};
}

wang::TileSet random_tile_set(std::mt19937& rng, int tiles,
                              const std::vector<std::string>& non_white_colors) {
    std::vector<wang::Color> colors{wang::Color::white()};
    for (const std::string& name : non_white_colors) colors.push_back(wang::Color::intern(name));
    std::vector<wang::TileType> out;
    for (int i = 0; i < tiles; ++i) out.push_back(random_tile(rng, colors));
    return wang::TileSet(std::move(out));
}

wang::DirectedGraph random_digraph(std::mt19937& rng, int max_nodes) {
    std::uniform_int_distribution<int> count(1, max_nodes);
    const int n = count(rng);
    wang::DirectedGraph g;
    for (int i = 0; i < n; ++i) g.add_node("v" + std::to_string(i));
    std::uniform_int_distribution<int> node(0, n - 1);
    std::uniform_int_distribution<int> edges(0, 2 * n);
    const int m = edges(rng);
    for (int i = 0; i < m; ++i) g.edges.emplace_back(node(rng), node(rng));
    g.source = node(rng);
    g.target = node(rng);
    return g;
}

const std::vector<TmFixture>& tm_corpus() {
    static const std::vector<TmFixture> corpus = {
        {"accept-empty",
         "Q: qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"", "a"},
         true},
        {"accept-if-a",
         "Q: qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' a -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"a", "b", "aa"},
         true},
        {"start-in-shuttle",
         "Q: qf\n"
         "Q': qf'\n"
         "init: qf'\n"
         "final: qf\n"
         "blank: _\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"", "a"},
         true},
        {"right-walker",
         "Q: q1 qf\n"
         "Q': q0' q1' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> _ S q1\n"
         "q1 _ -> _ R q1'\n"
         "q1' _ -> _ S q1\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {""},
         true},
        {"left-crash",
         "Q: q1 qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> _ L q1\n"
         "q0' a -> a L q1\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"", "a"},
         true},
        {"worked-example",
         "Q: q1 q2 qf\n"
         "Q': q0' q2' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' b -> a S q1\n"
         "q1 a -> a R q2'\n"
         "q2' b -> a S q2\n"
         "q2 a -> a S q2'\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"bba"},
         true},
        {"erase-one-accept",
         "Q: q1 qf\n"
         "Q': q0' q1' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' a -> _ S q1\n"
         "q1 _ -> _ S q1'\n"
         "q1' _ -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"a", "b"},
         true},
        {"nondet-lucky",
         "Q: q1 qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> _ S q1\n"
         "q0' _ -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {""},
         false},
        {"nondet-doomed",
         "Q: q1 q2 qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> a S q1\n"
         "q0' _ -> b S q2\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {""},
         false},
        {"sweep-right-erase",
         "Q: q1 qf\n"
         "Q': q0' q1' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' a -> _ S q1\n"
         "q1 _ -> _ R q1'\n"
         "q1' a -> _ S q1\n"
         "q1' _ -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"a", "aa"},
         true},
        {"pingpong-forever",
         "Q: q1 qf\n"
         "Q': q0' q1' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' b -> b S q1\n"
         "q1 b -> b S q1'\n"
         "q1' b -> b S q1\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"b"},
         true},
        {"dirty-accept",
         "Q: qf\n"
         "Q': q0' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' a -> b S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {"a"},
         true},
        {"needs-two-cells",
         "Q: q1 qf\n"
         "Q': q0' q1' qf'\n"
         "init: q0'\n"
         "final: qf\n"
         "blank: _\n"
         "q0' _ -> _ S q1\n"
         "q1 _ -> _ R q1'\n"
         "q1' _ -> _ S qf\n"
         "qf _ -> _ S qf'\n"
         "qf' _ -> _ S qf\n",
         {""},
         true},
    };
    return corpus;
}

const TmFixture& fig4_fixture() {
    for (const TmFixture& f : tm_corpus()) {
        if (f.name == "worked-example") return f;
    }
    throw std::logic_error("worked-example fixture missing");
}

wang::NormalizedTM load_fixture(const TmFixture& fixture) {
    const wang::TMDescription desc = wang::parse_tm(fixture.text);
    wang::NormalizationCheck check = wang::check_normalized(desc);
    if (!check.machine) {
        std::string what = "fixture '" + fixture.name + "' is not normalized:";
        for (const std::string& v : check.violations) what += " " + v;
        throw std::logic_error(what);
    }
    return std::move(*check.machine);
}

}  // namespace fixtures
