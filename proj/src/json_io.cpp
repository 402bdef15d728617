#include "wang/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wang {

namespace {

using nlohmann::json;

json tile_to_json(const TileType& t) {
    json j;
    j["left"] = std::string(t.left.name());
    j["top"] = std::string(t.top.name());
    j["right"] = std::string(t.right.name());
    j["bottom"] = std::string(t.bottom.name());
    return j;
}

TileType tile_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("tile must be a JSON object");
    for (const char* field : {"left", "top", "right", "bottom"}) {
        if (!j.contains(field) || !j.at(field).is_string()) {
            throw std::invalid_argument(std::string("tile is missing string field '") +
                                        field + "'");
        }
    }
    return TileType{Color::intern(j.at("left").get<std::string>()),
                    Color::intern(j.at("top").get<std::string>()),
                    Color::intern(j.at("right").get<std::string>()),
                    Color::intern(j.at("bottom").get<std::string>())};
}

}  // namespace

std::string instance_to_json(const TilingInstance& instance, bool with_dimensions) {
    json j;
    j["tiles"] = json::array();
    for (const TileType& t : instance.tile_set.tiles()) {
        j["tiles"].push_back(tile_to_json(t));
    }
    j["seed"] = instance.seed ? tile_to_json(*instance.seed) : json(nullptr);
    if (with_dimensions) {
        if (instance.height.is_fixed) {
            j["height"] = instance.height.rows;
        } else {
            j["height"] = "*";
        }
        j["width"] = instance.width;
        j["n"] = instance.n;
    }
    return j.dump(2) + "\n";
}

TilingInstance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("tiles") || !j.at("tiles").is_array()) {
        throw std::invalid_argument("tile-set JSON must have a 'tiles' array");
    }
    std::vector<TileType> tiles;
    for (const json& tj : j.at("tiles")) tiles.push_back(tile_from_json(tj));

    TilingInstance instance;
    instance.tile_set = TileSet(std::move(tiles));
    if (j.contains("seed") && !j.at("seed").is_null()) {
        instance.seed = tile_from_json(j.at("seed"));
    }
    if (j.contains("height")) {
        const json& h = j.at("height");
        if (h.is_string() && h.get<std::string>() == "*") {
            instance.height = HeightSpec::arbitrary();
        } else if (h.is_number_integer()) {
            instance.height = HeightSpec::fixed(h.get<int>());
        } else {
            throw std::invalid_argument("'height' must be an integer or \"*\"");
        }
    }
    if (j.contains("width")) instance.width = j.at("width").get<int>();
    if (j.contains("n")) instance.n = j.at("n").get<std::int64_t>();
    instance.check();
    return instance;
}

std::string tiling_to_json(const Tiling& tiling) {
    json j;
    j["height"] = tiling.height();
    j["width"] = tiling.width();
    j["rows"] = json::array();
    for (int i = 1; i <= tiling.height(); ++i) {
        json row = json::array();
        for (int jcol = 1; jcol <= tiling.width(); ++jcol) {
            row.push_back(tile_to_json(tiling.at(i, jcol)));
        }
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

Tiling tiling_from_json(const std::string& text) {
    json j = json::parse(text);
    const int h = j.at("height").get<int>();
    const int w = j.at("width").get<int>();
    std::vector<TileType> cells;
    cells.reserve(static_cast<std::size_t>(h) * w);
    const json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != h) {
        throw std::invalid_argument("tiling JSON 'rows' must have 'height' entries");
    }
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != w) {
            throw std::invalid_argument("tiling JSON row must have 'width' entries");
        }
        for (const json& tj : row) cells.push_back(tile_from_json(tj));
    }
    return Tiling(h, w, std::move(cells));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

}  // namespace wang
