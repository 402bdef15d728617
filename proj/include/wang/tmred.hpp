#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wang/core.hpp"

namespace wang {

enum class Move { Left, Right, Stay };

struct Transition {
    std::string from;
    std::string read;
    std::string write;
    Move move = Move::Stay;
    std::string to;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.from == b.from && a.read == b.read && a.write == b.write &&
               a.move == b.move && a.to == b.to;
    }
};

// Machine description as written in the text format:
//   Q: q1 q2 qf
//   Q': q0' q2' qf'
//   init: q0'
//   final: qf
//   blank: _
//   q0' b -> a S q1
// One transition per line, MOVE in {L,R,S}; '#' starts a comment line.
// State names may not contain ',', '#', or whitespace; symbol names
// additionally may not contain "'" (primes tag row classes in compiled
// colors). Neither may be the word "white".
struct TMDescription {
    std::vector<std::string> q_states;
    std::vector<std::string> qprime_states;
    std::string initial;
    std::string final_state;
    std::string blank;
    std::vector<Transition> transitions;

    friend bool operator==(const TMDescription& a, const TMDescription& b) {
        return a.q_states == b.q_states && a.qprime_states == b.qprime_states &&
               a.initial == b.initial && a.final_state == b.final_state &&
               a.blank == b.blank && a.transitions == b.transitions;
    }
};

TMDescription parse_tm(const std::string& text);
std::string tm_to_text(const TMDescription& tm);

// Word helpers: CLI input words are sequences of single-character symbols.
std::vector<std::string> parse_word(const std::string& word);

// A machine that passed the normalization check. The accepting state's primed
// copy is the state named final + "'".
struct NormalizedTM {
    TMDescription desc;
    std::string final_copy;
    std::vector<std::string> symbols;  // blank plus transition symbols, stable order

    bool in_q(const std::string& state) const;
    bool in_qprime(const std::string& state) const;
    bool is_deterministic() const;
};

struct NormalizationCheck {
    std::optional<NormalizedTM> machine;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

// Checks the normalization conditions: the initial state lies in Q', Q-moves
// go right or stay into Q', Q'-moves go left or stay into Q, the final state
// lies in Q and has a primed copy with stay shuttles on the blank symbol, and
// the two state sets are disjoint. The erased-tape-at-acceptance condition
// cannot be checked statically; it is flagged as a runtime obligation and
// verified by the simulator on each run.
NormalizationCheck check_normalized(const TMDescription& desc);

struct TMConfig {
    std::vector<std::string> tape;  // fixed allotment of cells, blank padded
    int head = 1;                   // 1-based; moving left off cell 1 is undefined
    std::string state;

    friend bool operator==(const TMConfig& a, const TMConfig& b) {
        return a.tape == b.tape && a.head == b.head && a.state == b.state;
    }
};

TMConfig initial_config(const NormalizedTM& tm, const std::vector<std::string>& input,
                        int cells);

// All configs reachable in one step within the config's cell allotment.
// Branches that fall off the tape are dropped.
std::vector<TMConfig> successors(const NormalizedTM& tm, const TMConfig& config);

enum class RunStatus { Accepted, Stuck, Running };

struct SimOutcome {
    RunStatus status = RunStatus::Running;
    int steps = 0;                    // transitions taken when the status was decided
    std::vector<TMConfig> trace;      // configs c_1 .. c_{steps+1}
    std::string reason;               // for Stuck
    bool condition5_violated = false; // reached the final state with a dirty tape
};

// Deterministic run. Accepted means the final state was reached with the tape
// erased (after which the machine shuttles forever); reaching it with a dirty
// tape sets condition5_violated and the run continues. Nondeterministic
// machines are rejected here; oracles drive successors() instead.
SimOutcome simulate(const NormalizedTM& tm, const std::vector<std::string>& input,
                    int max_steps, int max_cells);

// Compiled tile set for executions of tm on the given input within `width`
// cells. Colors are the composite strings drawn in the construction ("q0',b'",
// "#2" for seed-row positions); primes tag the Q/Q' row alternation.
struct CompiledTm {
    NormalizedTM tm;
    std::vector<std::string> input;
    int width = 1;
    TileSet tile_set;
    TileType seed;

    TilingInstance instance(HeightSpec height) const;
    // The square instance of side `width` used by the master equivalence.
    TilingInstance square_instance() const { return instance(HeightSpec::fixed(width)); }
};

CompiledTm compile_tileset(const NormalizedTM& tm, const std::vector<std::string>& input,
                           int width);

// Color spellings used by the compiler (exposed for tests and decoding).
Color symbol_color(const std::string& symbol, bool primed);
Color head_color(const std::string& state, const std::string& symbol, bool primed);
Color position_color(int column);

class TraceDecodeError : public std::runtime_error {
public:
    TraceDecodeError(int row, std::string what)
        : std::runtime_error("row " + std::to_string(row) + ": " + std::move(what)),
          row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

// Reads the execution back out of a valid tiling of a compiled instance: one
// config per non-closure row, decoded from the row's bottom colors. Asserts
// the prime parity rule (row i bottoms are primed exactly when i is odd) and
// that each row carries exactly one head.
std::vector<TMConfig> tiling_to_trace(const TilingInstance& instance, const Tiling& tiling);

// Renders an accepting trace as a tiling of the given height, padding with
// final-state shuttle steps and closing with the white-bottom row. Traces that
// do not reach the accepting shuttle in time cannot close the bottom and are
// rejected.
Tiling trace_to_tiling(const CompiledTm& compiled, const std::vector<TMConfig>& trace,
                       int height);

}  // namespace wang
