#include "wang/gen.hpp"

#include <limits>

#include "wang/solve.hpp"

namespace wang {

namespace {

TileType tile(const char* l, const char* t, const char* r, const char* b) {
    return TileType{Color::intern(l), Color::intern(t), Color::intern(r), Color::intern(b)};
}

}  // namespace

TileSet benchmark_tile_set() {
    return TileSet({
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

TileType benchmark_seed() { return tile("white", "white", "green", "red"); }

Family family_from_name(const std::string& name) {
    if (name == "square-n") return Family::SquareN;
    if (name == "exp-ladder") return Family::ExpLadder;
    if (name == "line-n") return Family::LineN;
    if (name == "game-alt") return Family::GameAlt;
    throw std::invalid_argument("unknown family '" + name +
                                "' (square-n, exp-ladder, line-n, game-alt)");
}

Generated gen_instance(Family family, std::int64_t n, int k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > std::numeric_limits<int>::max()) throw std::overflow_error("n too large");
    Generated out;
    out.instance.n = n;

    switch (family) {
        case Family::SquareN: {
            out.instance.tile_set = benchmark_tile_set();
            out.instance.seed = benchmark_seed();
            out.instance.width = static_cast<int>(n);
            out.instance.height = HeightSpec::fixed(static_cast<int>(n));
            out.description = std::to_string(n) + "x" + std::to_string(n) + " square";
            break;
        }
        case Family::ExpLadder: {
            if (k < 0) throw std::invalid_argument("exp-ladder needs k >= 0");
            const std::uint64_t h = expo(k, static_cast<std::uint64_t>(n));
            if (h > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
                throw std::overflow_error("exp-ladder height exceeds the representable range");
            }
            out.instance.tile_set = benchmark_tile_set();
            out.instance.seed = benchmark_seed();
            out.instance.width = static_cast<int>(n);
            out.instance.height = HeightSpec::fixed(static_cast<int>(h));
            out.description = "exp-ladder(k=" + std::to_string(k) + "): height " +
                              std::to_string(h) + ", width " + std::to_string(n) +
                              " (generator-only at large sizes)";
            break;
        }
        case Family::LineN: {
            const TileType seed = tile("white", "white", "white", "s");
            out.instance.tile_set = TileSet({
                seed,
                tile("white", "s", "white", "s"),
                tile("white", "s", "white", "t"),
                tile("white", "t", "white", "white"),
            });
            out.instance.seed = seed;
            out.instance.width = 1;
            out.instance.height = HeightSpec::fixed(static_cast<int>(n));
            out.description = std::to_string(n) + "x1 line";
            break;
        }
        case Family::GameAlt: {
            if (k < 1) throw std::invalid_argument("game-alt needs k >= 1");
            out.instance.tile_set = benchmark_tile_set();
            out.instance.seed = benchmark_seed();
            out.instance.width = static_cast<int>(n);
            const std::int64_t rows = static_cast<std::int64_t>(k) * n;
            if (rows > std::numeric_limits<int>::max()) {
                throw std::overflow_error("game-alt height exceeds the representable range");
            }
            out.instance.height = HeightSpec::fixed(static_cast<int>(rows));

            PlayerSequence seq;
            LenExpr len_n;
            len_n.uses_n = true;
            seq.prefix.push_back(SeqBlock{Player::Exists, len_n});
            for (int i = 1; i < k; ++i) {
                seq.prefix.push_back(SeqBlock{Player::ForAll, len_n});
                seq.prefix.push_back(SeqBlock{Player::Exists, len_n});
            }
            out.sequence = std::move(seq);
            out.description = "game-alt(k=" + std::to_string(k) + "): height " +
                              std::to_string(rows) + ", width " + std::to_string(n) +
                              ", sequence " + sequence_to_text(*out.sequence);
            break;
        }
    }
    out.instance.check();
    return out;
}

}  // namespace wang
