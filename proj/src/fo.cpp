#include "wang/fo.hpp"

#include <algorithm>
#include <sstream>

namespace wang {

namespace {

const char* pred_name(FOFormula::Pred p) {
    switch (p) {
        case FOFormula::Pred::H: return "H";
        case FOFormula::Pred::V: return "V";
        case FOFormula::Pred::LW: return "LW";
        case FOFormula::Pred::RW: return "RW";
        case FOFormula::Pred::TW: return "TW";
        case FOFormula::Pred::BW: return "BW";
        case FOFormula::Pred::SEED: return "SEED";
    }
    return "?";
}

std::optional<FOFormula::Pred> pred_from_name(const std::string& name) {
    for (FOFormula::Pred p :
         {FOFormula::Pred::H, FOFormula::Pred::V, FOFormula::Pred::LW, FOFormula::Pred::RW,
          FOFormula::Pred::TW, FOFormula::Pred::BW, FOFormula::Pred::SEED}) {
        if (name == pred_name(p)) return p;
    }
    return std::nullopt;
}

bool binary(FOFormula::Pred p) { return p == FOFormula::Pred::H || p == FOFormula::Pred::V; }

}  // namespace

bool operator==(const FOFormula& a, const FOFormula& b) {
    if (a.vars != b.vars || a.atoms.size() != b.atoms.size()) return false;
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        if (a.atoms[i].pred != b.atoms[i].pred || a.atoms[i].a != b.atoms[i].a ||
            a.atoms[i].b != b.atoms[i].b) {
            return false;
        }
    }
    return true;
}

FOFormula emit_formula(int height, int width, bool with_seed) {
    if (height < 1 || width < 1) throw std::invalid_argument("formula needs a 1x1 rectangle at least");
    FOFormula f;
    auto var = [width](int i, int j) { return (i - 1) * width + (j - 1); };
    for (int i = 1; i <= height; ++i) {
        for (int j = 1; j <= width; ++j) {
            f.vars.push_back("t_" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    for (int i = 1; i <= height; ++i) {
        for (int j = 1; j + 1 <= width; ++j) {
            f.atoms.push_back({FOFormula::Pred::H, var(i, j), var(i, j + 1)});
        }
    }
    for (int i = 1; i + 1 <= height; ++i) {
        for (int j = 1; j <= width; ++j) {
            f.atoms.push_back({FOFormula::Pred::V, var(i, j), var(i + 1, j)});
        }
    }
    for (int i = 1; i <= height; ++i) {
        f.atoms.push_back({FOFormula::Pred::LW, var(i, 1)});
        f.atoms.push_back({FOFormula::Pred::RW, var(i, width)});
    }
    for (int j = 1; j <= width; ++j) {
        f.atoms.push_back({FOFormula::Pred::TW, var(1, j)});
        f.atoms.push_back({FOFormula::Pred::BW, var(height, j)});
    }
    if (with_seed) f.atoms.push_back({FOFormula::Pred::SEED, var(1, 1)});
    return f;
}

namespace {

bool atom_holds(const FOFormula::Atom& atom, const std::vector<const TileType*>& assignment,
                const std::optional<TileType>& seed) {
    const TileType& t = *assignment[static_cast<std::size_t>(atom.a)];
    switch (atom.pred) {
        case FOFormula::Pred::H:
            return t.right == assignment[static_cast<std::size_t>(atom.b)]->left;
        case FOFormula::Pred::V:
            return t.bottom == assignment[static_cast<std::size_t>(atom.b)]->top;
        case FOFormula::Pred::LW: return t.left.is_white();
        case FOFormula::Pred::RW: return t.right.is_white();
        case FOFormula::Pred::TW: return t.top.is_white();
        case FOFormula::Pred::BW: return t.bottom.is_white();
        case FOFormula::Pred::SEED: return seed && t == *seed;
    }
    return false;
}

bool assign(const FOFormula& formula, const TileSet& set,
            std::vector<const TileType*>& assignment, std::size_t var,
            const std::optional<TileType>& seed) {
    if (var == formula.vars.size()) {
        return std::all_of(formula.atoms.begin(), formula.atoms.end(),
                           [&](const FOFormula::Atom& a) { return atom_holds(a, assignment, seed); });
    }
    for (const TileType& t : set.tiles()) {
        assignment[var] = &t;
        if (assign(formula, set, assignment, var + 1, seed)) return true;
    }
    return false;
}

}  // namespace

bool evaluate_formula(const FOFormula& formula, const TileSet& set,
                      const std::optional<TileType>& seed) {
    if (set.empty()) return formula.vars.empty();
    std::vector<const TileType*> assignment(formula.vars.size(), nullptr);
    return assign(formula, set, assignment, 0, seed);
}

std::string formula_to_text(const FOFormula& formula) {
    std::ostringstream out;
    out << "(exists (";
    for (std::size_t i = 0; i < formula.vars.size(); ++i) {
        if (i) out << " ";
        out << formula.vars[i];
    }
    out << ") (and";
    for (const FOFormula::Atom& atom : formula.atoms) {
        out << " (" << pred_name(atom.pred) << " " << formula.vars[static_cast<std::size_t>(atom.a)];
        if (binary(atom.pred)) out << " " << formula.vars[static_cast<std::size_t>(atom.b)];
        out << ")";
    }
    out << "))";
    return out.str();
}

namespace {

struct SexprCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) {
            throw std::invalid_argument(std::string("formula text: expected '") + c +
                                        "' at offset " + std::to_string(pos));
        }
        ++pos;
    }
    std::string word() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && !isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')') {
            ++pos;
        }
        if (start == pos) throw std::invalid_argument("formula text: expected a word");
        return text.substr(start, pos - start);
    }
    bool at(char c) {
        skip();
        return pos < text.size() && text[pos] == c;
    }
};

}  // namespace

FOFormula formula_from_text(const std::string& text) {
    FOFormula f;
    SexprCursor in{text};
    in.expect('(');
    if (in.word() != "exists") throw std::invalid_argument("formula must start with (exists");
    in.expect('(');
    std::vector<std::string> vars;
    while (!in.at(')')) vars.push_back(in.word());
    in.expect(')');
    f.vars = vars;
    auto var_index = [&vars](const std::string& name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        return static_cast<int>(it - vars.begin());
    };
    in.expect('(');
    if (in.word() != "and") throw std::invalid_argument("formula body must be (and ...)");
    while (!in.at(')')) {
        in.expect('(');
        const std::string pred = in.word();
        auto p = pred_from_name(pred);
        if (!p) throw std::invalid_argument("unknown predicate '" + pred + "'");
        FOFormula::Atom atom;
        atom.pred = *p;
        atom.a = var_index(in.word());
        if (binary(*p)) atom.b = var_index(in.word());
        in.expect(')');
        f.atoms.push_back(atom);
    }
    in.expect(')');
    in.expect(')');
    return f;
}

}  // namespace wang
