#include "wang/render.hpp"

#include <sstream>
#include <unordered_map>

namespace wang {

namespace {

const char kAsciiGlyphs[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

const char* const kSvgFills[] = {
    "#4daf4a", "#e41a1c", "#ffdd33", "#377eb8", "#984ea3",
    "#ff7f00", "#a65628", "#f781bf", "#999999", "#66c2a5",
};

std::string auto_entry(RenderFormat format, std::size_t index) {
    if (format == RenderFormat::Ascii) {
        if (index < sizeof(kAsciiGlyphs) - 1) return std::string(1, kAsciiGlyphs[index]);
        return "?";
    }
    if (index < sizeof(kSvgFills) / sizeof(kSvgFills[0])) return kSvgFills[index];
    return "hsl(" + std::to_string((index * 47) % 360) + ",70%,60%)";
}

// Every color gets a style: white first, then the provided legend, then
// first-appearance order over the tiling.
std::vector<std::pair<Color, std::string>> full_legend(const Tiling& tiling,
                                                       const RenderSpec& spec) {
    std::vector<std::pair<Color, std::string>> legend;
    std::unordered_map<std::uint32_t, bool> have;
    auto add = [&](Color c, std::string style) {
        if (have[c.id()]) return;
        have[c.id()] = true;
        legend.emplace_back(c, std::move(style));
    };
    add(Color::white(), spec.format == RenderFormat::Ascii ? "." : "#ffffff");
    for (const auto& [color, style] : spec.legend) add(color, style);
    std::size_t auto_count = 0;
    for (const TileType& t : tiling.cells()) {
        for (Color c : {t.left, t.top, t.right, t.bottom}) {
            if (!have[c.id()]) add(c, auto_entry(spec.format, auto_count++));
        }
    }
    return legend;
}

std::string render_ascii(const Tiling& tiling, const RenderSpec& spec) {
    const auto legend = full_legend(tiling, spec);
    std::unordered_map<std::uint32_t, std::string> style;
    for (const auto& [color, s] : legend) style[color.id()] = s;
    auto glyph = [&](Color c) { return style.at(c.id()); };

    std::ostringstream out;
    const int w = tiling.width();
    std::string rule = "+";
    for (int j = 0; j < w; ++j) rule += "---+";
    out << rule << "\n";
    for (int i = 1; i <= tiling.height(); ++i) {
        std::string top = "|", mid = "|", bottom = "|";
        for (int j = 1; j <= w; ++j) {
            const TileType& t = tiling.at(i, j);
            top += " " + glyph(t.top) + " |";
            mid += glyph(t.left) + " " + glyph(t.right) + "|";
            bottom += " " + glyph(t.bottom) + " |";
        }
        out << top << "\n" << mid << "\n" << bottom << "\n" << rule << "\n";
    }
    out << "legend:";
    for (const auto& [color, s] : legend) out << " " << s << "=" << color.name();
    out << "\n";
    return out.str();
}

std::string render_svg(const Tiling& tiling, const RenderSpec& spec) {
    const auto legend = full_legend(tiling, spec);
    std::unordered_map<std::uint32_t, std::string> style;
    for (const auto& [color, s] : legend) style[color.id()] = s;
    const int s = spec.cell_size;
    const int half = s / 2;
    const int w = tiling.width() * s;
    const int h = tiling.height() * s;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (int i = 1; i <= tiling.height(); ++i) {
        for (int j = 1; j <= tiling.width(); ++j) {
            const TileType& t = tiling.at(i, j);
            const int x = (j - 1) * s;
            const int y = (i - 1) * s;
            const int cx = x + half;
            const int cy = y + half;
            auto triangle = [&](int x1, int y1, int x2, int y2, Color c) {
                out << "  <polygon points=\"" << x1 << "," << y1 << " " << x2 << "," << y2
                    << " " << cx << "," << cy << "\" fill=\"" << style.at(c.id())
                    << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
            };
            triangle(x, y, x + s, y, t.top);
            triangle(x + s, y, x + s, y + s, t.right);
            triangle(x, y + s, x + s, y + s, t.bottom);
            triangle(x, y, x, y + s, t.left);
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const Tiling& tiling, const RenderSpec& spec) {
    if (spec.cell_size < 2) throw std::invalid_argument("cell size must be at least 2");
    return spec.format == RenderFormat::Ascii ? render_ascii(tiling, spec)
                                              : render_svg(tiling, spec);
}

}  // namespace wang
