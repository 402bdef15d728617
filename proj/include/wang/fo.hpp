#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wang/core.hpp"

namespace wang {

// Closed formulas of the emitted fragment: a block of existential tile
// variables over a conjunction of atoms. H and V are the horizontal and
// vertical edge predicates; LW/RW/TW/BW test white sides; SEED pins the
// variable to the seed tile.
struct FOFormula {
    enum class Pred { H, V, LW, RW, TW, BW, SEED };

    struct Atom {
        Pred pred;
        int a = 0;   // variable index
        int b = -1;  // second variable for binary atoms
    };

    std::vector<std::string> vars;
    std::vector<Atom> atoms;

    // Quantifier nodes plus one conjunction node plus the atoms.
    std::size_t node_count() const { return vars.size() + 1 + atoms.size(); }

    friend bool operator==(const FOFormula& a, const FOFormula& b);
};

// One variable t_i_j per cell of the k x l rectangle, H-atoms between
// horizontal neighbors, V-atoms between vertical neighbors, border atoms on
// the boundary and an optional SEED atom on t_1_1. The border atoms are an
// explicit extension of the quoted H/V core: without them the formula would
// not match the bordered-rectangle semantics.
FOFormula emit_formula(int height, int width, bool with_seed);

// Model checks the formula over the finite structure whose universe is the
// tile set: H(t,t') iff right(t)=left(t'), V(t,t') iff bottom(t)=top(t'),
// border atoms are white tests, SEED compares against the given tile.
bool evaluate_formula(const FOFormula& formula, const TileSet& set,
                      const std::optional<TileType>& seed = std::nullopt);

// S-expression form: (exists (t_1_1 ...) (and (H t_1_1 t_1_2) ...)).
std::string formula_to_text(const FOFormula& formula);
FOFormula formula_from_text(const std::string& text);

}  // namespace wang
