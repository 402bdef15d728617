#include "wang/tmred.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace wang {

namespace {

void check_name(const std::string& name, bool is_symbol) {
    const char* kind = is_symbol ? "symbol" : "state";
    if (name.empty()) throw std::invalid_argument(std::string(kind) + " name must be nonempty");
    if (name == "white") {
        throw std::invalid_argument(std::string(kind) +
                                    " name 'white' would collide with the border color");
    }
    if (name.find_first_of(",# \t") != std::string::npos) {
        throw std::invalid_argument(std::string(kind) + " name '" + name +
                                    "' may not contain ',', '#', or whitespace");
    }
    if (is_symbol && name.find('\'') != std::string::npos) {
        throw std::invalid_argument("symbol name '" + name + "' may not contain a prime");
    }
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::string move_to_text(Move m) {
    switch (m) {
        case Move::Left: return "L";
        case Move::Right: return "R";
        default: return "S";
    }
}

Move move_from_text(const std::string& s) {
    if (s == "L") return Move::Left;
    if (s == "R") return Move::Right;
    if (s == "S") return Move::Stay;
    throw std::invalid_argument("move must be L, R or S, got '" + s + "'");
}

std::vector<std::string> split_names(std::istringstream& in, bool symbols) {
    std::vector<std::string> out;
    std::string name;
    while (in >> name) {
        check_name(name, symbols);
        out.push_back(name);
    }
    return out;
}

bool contains_transition(const TMDescription& desc, const Transition& t) {
    return std::find(desc.transitions.begin(), desc.transitions.end(), t) !=
           desc.transitions.end();
}

}  // namespace

TMDescription parse_tm(const std::string& text) {
    TMDescription tm;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_q = false, have_qp = false, have_init = false, have_final = false,
         have_blank = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string head;
        fields >> head;
        try {
            if (head == "Q:") {
                tm.q_states = split_names(fields, false);
                have_q = true;
            } else if (head == "Q':") {
                tm.qprime_states = split_names(fields, false);
                have_qp = true;
            } else if (head == "init:") {
                fields >> tm.initial;
                check_name(tm.initial, false);
                have_init = true;
            } else if (head == "final:") {
                fields >> tm.final_state;
                check_name(tm.final_state, false);
                have_final = true;
            } else if (head == "blank:") {
                fields >> tm.blank;
                check_name(tm.blank, true);
                have_blank = true;
            } else {
                Transition t;
                t.from = head;
                std::string arrow, move;
                if (!(fields >> t.read >> arrow >> t.write >> move >> t.to) || arrow != "->") {
                    throw std::invalid_argument(
                        "expected 'state symbol -> symbol MOVE state'");
                }
                check_name(t.from, false);
                check_name(t.read, true);
                check_name(t.write, true);
                check_name(t.to, false);
                t.move = move_from_text(move);
                tm.transitions.push_back(std::move(t));
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_q || !have_qp || !have_init || !have_final || !have_blank) {
        throw std::invalid_argument(
            "machine needs 'Q:', 'Q':', 'init:', 'final:' and 'blank:' lines");
    }
    return tm;
}

std::string tm_to_text(const TMDescription& tm) {
    std::ostringstream out;
    out << "Q:";
    for (const auto& s : tm.q_states) out << " " << s;
    out << "\nQ':";
    for (const auto& s : tm.qprime_states) out << " " << s;
    out << "\ninit: " << tm.initial << "\nfinal: " << tm.final_state
        << "\nblank: " << tm.blank << "\n";
    for (const Transition& t : tm.transitions) {
        out << t.from << " " << t.read << " -> " << t.write << " " << move_to_text(t.move)
            << " " << t.to << "\n";
    }
    return out.str();
}

std::vector<std::string> parse_word(const std::string& word) {
    std::vector<std::string> out;
    for (char c : word) {
        std::string symbol(1, c);
        check_name(symbol, true);
        out.push_back(std::move(symbol));
    }
    return out;
}

bool NormalizedTM::in_q(const std::string& state) const { return contains(desc.q_states, state); }
bool NormalizedTM::in_qprime(const std::string& state) const {
    return contains(desc.qprime_states, state);
}

bool NormalizedTM::is_deterministic() const {
    std::unordered_set<std::string> seen;
    for (const Transition& t : desc.transitions) {
        if (!seen.insert(t.from + "\x1f" + t.read).second) return false;
    }
    return true;
}

NormalizationCheck check_normalized(const TMDescription& desc) {
    NormalizationCheck check;
    auto violate = [&check](const std::string& what) { check.violations.push_back(what); };

    for (const std::string& s : desc.q_states) {
        if (contains(desc.qprime_states, s)) {
            violate("state '" + s + "' appears in both Q and Q'");
        }
    }
    if (!contains(desc.qprime_states, desc.initial)) {
        violate("condition 1: initial state '" + desc.initial + "' is not in Q'");
    }
    for (const Transition& t : desc.transitions) {
        const bool from_q = contains(desc.q_states, t.from);
        const bool from_qp = contains(desc.qprime_states, t.from);
        if (!from_q && !from_qp) {
            violate("transition from undeclared state '" + t.from + "'");
            continue;
        }
        if (!contains(desc.q_states, t.to) && !contains(desc.qprime_states, t.to)) {
            violate("transition to undeclared state '" + t.to + "'");
            continue;
        }
        if (from_q) {
            if (!contains(desc.qprime_states, t.to)) {
                violate("condition 2: transition " + t.from + " " + t.read +
                        " -> ... must enter Q'");
            }
            if (t.move == Move::Left) {
                violate("condition 2: transition from '" + t.from +
                        "' in Q may not move the cursor left");
            }
        } else {
            if (!contains(desc.q_states, t.to)) {
                violate("condition 3: transition " + t.from + " " + t.read +
                        " -> ... must enter Q");
            }
            if (t.move == Move::Right) {
                violate("condition 3: transition from '" + t.from +
                        "' in Q' may not move the cursor right");
            }
        }
    }
    if (!contains(desc.q_states, desc.final_state)) {
        violate("condition 4: final state '" + desc.final_state + "' is not in Q");
    }
    const std::string final_copy = desc.final_state + "'";
    if (!contains(desc.qprime_states, final_copy)) {
        violate("condition 6: the final state needs its primed copy '" + final_copy +
                "' in Q'");
    } else {
        const Transition down{desc.final_state, desc.blank, desc.blank, Move::Stay, final_copy};
        const Transition up{final_copy, desc.blank, desc.blank, Move::Stay, desc.final_state};
        if (!contains_transition(desc, down) || !contains_transition(desc, up)) {
            violate("condition 6: shuttle transitions " + desc.final_state + " <-> " +
                    final_copy + " on the blank symbol are missing");
        }
    }

    check.notes.push_back(
        "condition 5 (tape erased when the final state is reached) is a runtime "
        "obligation; the simulator flags violations on each run");

    if (!check.violations.empty()) return check;

    NormalizedTM machine;
    machine.desc = desc;
    machine.final_copy = final_copy;
    machine.symbols.push_back(desc.blank);
    for (const Transition& t : desc.transitions) {
        if (!contains(machine.symbols, t.read)) machine.symbols.push_back(t.read);
        if (!contains(machine.symbols, t.write)) machine.symbols.push_back(t.write);
    }
    check.machine = std::move(machine);
    return check;
}

TMConfig initial_config(const NormalizedTM& tm, const std::vector<std::string>& input,
                        int cells) {
    if (cells < 1) throw std::invalid_argument("cell allotment must be >= 1");
    if (static_cast<int>(input.size()) > cells) {
        throw std::invalid_argument("input does not fit in the cell allotment");
    }
    TMConfig config;
    config.tape.assign(static_cast<std::size_t>(cells), tm.desc.blank);
    std::copy(input.begin(), input.end(), config.tape.begin());
    config.head = 1;
    config.state = tm.desc.initial;
    return config;
}

namespace {

std::optional<TMConfig> apply_transition(const TMConfig& config, const Transition& t) {
    TMConfig next = config;
    next.tape[static_cast<std::size_t>(config.head - 1)] = t.write;
    next.state = t.to;
    if (t.move == Move::Left) next.head -= 1;
    if (t.move == Move::Right) next.head += 1;
    if (next.head < 1 || next.head > static_cast<int>(next.tape.size())) return std::nullopt;
    return next;
}

bool tape_erased(const NormalizedTM& tm, const TMConfig& config) {
    for (const std::string& s : config.tape) {
        if (s != tm.desc.blank) return false;
    }
    return true;
}

}  // namespace

std::vector<TMConfig> successors(const NormalizedTM& tm, const TMConfig& config) {
    std::vector<TMConfig> out;
    const std::string& read = config.tape[static_cast<std::size_t>(config.head - 1)];
    for (const Transition& t : tm.desc.transitions) {
        if (t.from != config.state || t.read != read) continue;
        if (auto next = apply_transition(config, t)) out.push_back(std::move(*next));
    }
    return out;
}

SimOutcome simulate(const NormalizedTM& tm, const std::vector<std::string>& input,
                    int max_steps, int max_cells) {
    if (max_steps < 0 || max_cells < 1) {
        throw std::invalid_argument("simulation bounds must be positive");
    }
    if (!tm.is_deterministic()) {
        throw std::invalid_argument(
            "simulate requires a deterministic machine; use successors() for run search");
    }

    SimOutcome outcome;
    TMConfig config = initial_config(tm, input, max_cells);
    outcome.trace.push_back(config);
    if (config.state == tm.final_copy || config.state == tm.desc.final_state) {
        // Degenerate machines may start inside the accepting shuttle.
        if (tape_erased(tm, config)) {
            outcome.status = RunStatus::Accepted;
            return outcome;
        }
        outcome.condition5_violated = true;
    }
    for (int step = 1; step <= max_steps; ++step) {
        const std::string& read = config.tape[static_cast<std::size_t>(config.head - 1)];
        const Transition* chosen = nullptr;
        for (const Transition& t : tm.desc.transitions) {
            if (t.from == config.state && t.read == read) {
                chosen = &t;
                break;
            }
        }
        if (!chosen) {
            outcome.status = RunStatus::Stuck;
            outcome.steps = step - 1;
            outcome.reason = "no transition from state '" + config.state + "' reading '" +
                             read + "'";
            return outcome;
        }
        auto next = apply_transition(config, *chosen);
        if (!next) {
            outcome.status = RunStatus::Stuck;
            outcome.steps = step - 1;
            outcome.reason = chosen->move == Move::Left
                                 ? "cursor would move left off cell 1"
                                 : "cursor would move past the cell allotment";
            return outcome;
        }
        config = std::move(*next);
        outcome.trace.push_back(config);
        if (config.state == tm.desc.final_state) {
            if (tape_erased(tm, config)) {
                outcome.status = RunStatus::Accepted;
                outcome.steps = step;
                return outcome;
            }
            outcome.condition5_violated = true;
        }
    }
    outcome.status = RunStatus::Running;
    outcome.steps = max_steps;
    return outcome;
}

Color symbol_color(const std::string& symbol, bool primed) {
    return Color::intern(primed ? symbol + "'" : symbol);
}

Color head_color(const std::string& state, const std::string& symbol, bool primed) {
    return Color::intern(state + "," + (primed ? symbol + "'" : symbol));
}

Color position_color(int column) { return Color::intern("#" + std::to_string(column)); }

TilingInstance CompiledTm::instance(HeightSpec height) const {
    TilingInstance out;
    out.tile_set = tile_set;
    out.seed = seed;
    out.width = width;
    out.height = height;
    out.n = width;
    return out;
}

CompiledTm compile_tileset(const NormalizedTM& tm, const std::vector<std::string>& input,
                           int width) {
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (static_cast<int>(input.size()) > width) {
        throw std::invalid_argument("width is smaller than the input word");
    }

    std::vector<std::string> alphabet = tm.symbols;
    for (const std::string& s : input) {
        check_name(s, true);
        if (!contains(alphabet, s)) alphabet.push_back(s);
    }

    const Color white = Color::white();
    std::vector<TileType> tiles;

    // Seed row, one tile per column. Horizontal position colors chain the row
    // so that below a white top the full input materializes exactly once.
    const auto symbol_at = [&](int col) -> const std::string& {
        return col <= static_cast<int>(input.size()) ? input[static_cast<std::size_t>(col - 1)]
                                                     : tm.desc.blank;
    };
    TileType seed;
    for (int col = 1; col <= width; ++col) {
        TileType t;
        t.left = col == 1 ? white : position_color(col);
        t.top = white;
        t.right = col == width ? white : position_color(col + 1);
        t.bottom = col == 1 ? head_color(tm.desc.initial, symbol_at(1), true)
                            : symbol_color(symbol_at(col), true);
        if (col == 1) seed = t;
        tiles.push_back(t);
    }

    // Copy tiles keep idle cells in step with the row alternation.
    for (const std::string& a : alphabet) {
        tiles.push_back(TileType{white, symbol_color(a, false), white, symbol_color(a, true)});
        tiles.push_back(TileType{white, symbol_color(a, true), white, symbol_color(a, false)});
    }
    // Head-receive tiles: a right-moving head arrives from the left neighbor,
    // a left-moving head arrives from the right neighbor.
    for (const std::string& a : alphabet) {
        for (const std::string& qp : tm.desc.qprime_states) {
            tiles.push_back(TileType{Color::intern(qp), symbol_color(a, false), white,
                                     head_color(qp, a, true)});
        }
        for (const std::string& q : tm.desc.q_states) {
            tiles.push_back(TileType{white, symbol_color(a, true), Color::intern(q),
                                     head_color(q, a, false)});
        }
    }
    // Transition tiles.
    for (const Transition& t : tm.desc.transitions) {
        const bool from_q = tm.in_q(t.from);
        if (from_q && t.move == Move::Right) {
            tiles.push_back(TileType{white, head_color(t.from, t.read, false),
                                     Color::intern(t.to), symbol_color(t.write, true)});
        } else if (from_q) {
            tiles.push_back(TileType{white, head_color(t.from, t.read, false), white,
                                     head_color(t.to, t.write, true)});
        } else if (t.move == Move::Left) {
            tiles.push_back(TileType{Color::intern(t.to), head_color(t.from, t.read, true),
                                     white, symbol_color(t.write, false)});
        } else {
            tiles.push_back(TileType{white, head_color(t.from, t.read, true), white,
                                     head_color(t.to, t.write, false)});
        }
    }
    // Bottom closure: only an erased, final-primed row may end the rectangle.
    tiles.push_back(TileType{white, symbol_color(tm.desc.blank, true), white, white});
    tiles.push_back(TileType{white, head_color(tm.final_copy, tm.desc.blank, true), white, white});

    CompiledTm compiled;
    compiled.tm = tm;
    compiled.input = input;
    compiled.width = width;
    compiled.tile_set = TileSet(std::move(tiles));
    compiled.seed = seed;
    return compiled;
}

namespace {

struct DecodedColor {
    enum class Kind { White, Symbol, Head } kind = Kind::White;
    bool primed = false;
    std::string state;
    std::string symbol;
};

DecodedColor decode_vertical_color(Color c, int row) {
    DecodedColor out;
    if (c.is_white()) return out;
    std::string name(c.name());
    if (name[0] == '#') {
        throw TraceDecodeError(row, "position color '" + name + "' on a vertical edge");
    }
    const auto comma = name.find(',');
    std::string symbol_part;
    if (comma != std::string::npos) {
        out.kind = DecodedColor::Kind::Head;
        out.state = name.substr(0, comma);
        symbol_part = name.substr(comma + 1);
    } else {
        out.kind = DecodedColor::Kind::Symbol;
        symbol_part = std::move(name);
    }
    if (!symbol_part.empty() && symbol_part.back() == '\'') {
        out.primed = true;
        symbol_part.pop_back();
    }
    if (symbol_part.empty()) {
        throw TraceDecodeError(row, "empty symbol in color '" + std::string(c.name()) + "'");
    }
    out.symbol = std::move(symbol_part);
    return out;
}

}  // namespace

std::vector<TMConfig> tiling_to_trace(const TilingInstance& instance, const Tiling& tiling) {
    const ValidityReport report = validate_tiling(instance.tile_set, tiling, instance.seed);
    if (!report.valid) {
        throw std::invalid_argument("tiling is not valid for the compiled instance");
    }

    std::vector<TMConfig> trace;
    const int h = tiling.height();
    const int w = tiling.width();
    for (int i = 1; i <= h; ++i) {
        bool all_white = true;
        for (int j = 1; j <= w; ++j) {
            if (!tiling.at(i, j).bottom.is_white()) all_white = false;
        }
        if (all_white) {
            if (i != h) {
                throw TraceDecodeError(i, "closure row before the last row");
            }
            break;
        }

        TMConfig config;
        config.tape.assign(static_cast<std::size_t>(w), "");
        config.head = 0;
        std::optional<bool> row_primed;
        for (int j = 1; j <= w; ++j) {
            const DecodedColor d = decode_vertical_color(tiling.at(i, j).bottom, i);
            if (d.kind == DecodedColor::Kind::White) {
                throw TraceDecodeError(i, "white bottom at column " + std::to_string(j) +
                                              " inside a configuration row");
            }
            if (row_primed && *row_primed != d.primed) {
                throw TraceDecodeError(i, "mixed primed and unprimed colors");
            }
            row_primed = d.primed;
            config.tape[static_cast<std::size_t>(j - 1)] = d.symbol;
            if (d.kind == DecodedColor::Kind::Head) {
                if (config.head != 0) {
                    throw TraceDecodeError(i, "two heads, at columns " +
                                                  std::to_string(config.head) + " and " +
                                                  std::to_string(j));
                }
                config.head = j;
                config.state = d.state;
            }
        }
        if (config.head == 0) throw TraceDecodeError(i, "no head in this row");
        if (*row_primed != (i % 2 == 1)) {
            throw TraceDecodeError(i, "prime parity violated: row " + std::to_string(i) +
                                          (*row_primed ? " is primed" : " is unprimed"));
        }
        trace.push_back(std::move(config));
    }
    if (trace.empty()) throw TraceDecodeError(1, "tiling decodes to an empty trace");
    return trace;
}

Tiling trace_to_tiling(const CompiledTm& compiled, const std::vector<TMConfig>& trace,
                       int height) {
    const NormalizedTM& tm = compiled.tm;
    const int w = compiled.width;
    if (height < 2) throw std::invalid_argument("an accepting tiling needs at least 2 rows");
    if (trace.empty()) throw std::invalid_argument("trace is empty");
    const int target = height - 1;
    if (static_cast<int>(trace.size()) > target) {
        throw std::invalid_argument("trace of " + std::to_string(trace.size()) +
                                    " configs exceeds the " + std::to_string(height) +
                                    "-row rectangle");
    }

    std::vector<TMConfig> configs = trace;
    for (TMConfig& c : configs) {
        if (static_cast<int>(c.tape.size()) > w) {
            throw std::invalid_argument("trace configs exceed the rectangle width");
        }
        c.tape.resize(static_cast<std::size_t>(w), tm.desc.blank);
    }
    // Pad with the accepting shuttle so the last config is the primed final
    // state over an erased tape.
    while (static_cast<int>(configs.size()) < target) {
        const TMConfig& last = configs.back();
        if ((last.state != tm.desc.final_state && last.state != tm.final_copy) ||
            !tape_erased(tm, last)) {
            throw std::invalid_argument(
                "cannot close the bottom: the trace does not end in the accepting shuttle");
        }
        TMConfig next = last;
        next.state = last.state == tm.desc.final_state ? tm.final_copy : tm.desc.final_state;
        configs.push_back(std::move(next));
    }
    const TMConfig& last = configs.back();
    if (last.state != tm.final_copy || !tape_erased(tm, last)) {
        throw std::invalid_argument(
            "cannot close the bottom: the last configuration must be the primed final "
            "state over an erased tape");
    }

    const Color white = Color::white();
    std::vector<TileType> cells;
    cells.reserve(static_cast<std::size_t>(height) * w);

    // Row 1: the seed row.
    {
        const auto symbol_at = [&](int col) -> const std::string& {
            return col <= static_cast<int>(compiled.input.size())
                       ? compiled.input[static_cast<std::size_t>(col - 1)]
                       : tm.desc.blank;
        };
        for (int col = 1; col <= w; ++col) {
            TileType t;
            t.left = col == 1 ? white : position_color(col);
            t.top = white;
            t.right = col == w ? white : position_color(col + 1);
            t.bottom = col == 1 ? head_color(tm.desc.initial, symbol_at(1), true)
                                : symbol_color(symbol_at(col), true);
            cells.push_back(t);
        }
    }

    // Rows 2..height-1: one transition per row.
    for (int i = 2; i <= height - 1; ++i) {
        const TMConfig& prev = configs[static_cast<std::size_t>(i - 2)];
        const TMConfig& next = configs[static_cast<std::size_t>(i - 1)];
        const bool prev_primed = tm.in_qprime(prev.state);
        const std::string& read = prev.tape[static_cast<std::size_t>(prev.head - 1)];
        const std::string& write = next.tape[static_cast<std::size_t>(prev.head - 1)];
        const int dir = next.head - prev.head;
        if (dir < -1 || dir > 1) {
            throw std::invalid_argument("trace configs are not single steps");
        }
        for (int col = 1; col <= w; ++col) {
            TileType t;
            t.left = white;
            t.right = white;
            if (col == prev.head) {
                t.top = head_color(prev.state, read, prev_primed);
                if (dir == 1) {
                    t.right = Color::intern(next.state);
                    t.bottom = symbol_color(write, !prev_primed);
                } else if (dir == -1) {
                    t.left = Color::intern(next.state);
                    t.bottom = symbol_color(write, !prev_primed);
                } else {
                    t.bottom = head_color(next.state, write, !prev_primed);
                }
            } else if (col == next.head && dir != 0) {
                const std::string& sym = prev.tape[static_cast<std::size_t>(col - 1)];
                t.top = symbol_color(sym, prev_primed);
                if (dir == 1) {
                    t.left = Color::intern(next.state);
                } else {
                    t.right = Color::intern(next.state);
                }
                t.bottom = head_color(next.state, sym, !prev_primed);
            } else {
                const std::string& sym = prev.tape[static_cast<std::size_t>(col - 1)];
                t.top = symbol_color(sym, prev_primed);
                t.bottom = symbol_color(sym, !prev_primed);
            }
            cells.push_back(t);
        }
    }

    // Closure row.
    for (int col = 1; col <= w; ++col) {
        TileType t;
        t.left = white;
        t.right = white;
        t.top = col == last.head ? head_color(tm.final_copy, tm.desc.blank, true)
                                 : symbol_color(tm.desc.blank, true);
        t.bottom = white;
        cells.push_back(t);
    }

    return Tiling(height, w, std::move(cells));
}

}  // namespace wang
