#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wang/core.hpp"

namespace wang {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
    RenderFormat format = RenderFormat::Ascii;
    int cell_size = 40;
    // color -> glyph (ascii) or fill style (svg). Colors appearing in the
    // tiling but missing here get palette entries in first-appearance order
    // (row-major cells, sides left/top/right/bottom), so identical inputs
    // always render to identical bytes.
    std::vector<std::pair<Color, std::string>> legend;
};

// Deterministic rendering; SVG draws each tile as four edge-colored triangles.
std::string render(const Tiling& tiling, const RenderSpec& spec = {});

}  // namespace wang
