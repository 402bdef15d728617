#pragma once

#include <string>

#include "wang/core.hpp"

namespace wang {

// Tile-set / instance JSON. The canonical schema is
//   {"tiles":[{"left":"white","top":"a","right":"white","bottom":"a'"}...],
//    "seed": {...}|null}
// with white spelled exactly "white". Instances emitted by generators add the
// optional fields "height" (integer or "*"), "width" and "n"; readers accept
// files with or without them.
std::string instance_to_json(const TilingInstance& instance, bool with_dimensions = true);
TilingInstance instance_from_json(const std::string& text);

std::string tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wang
