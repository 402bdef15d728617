#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wang/core.hpp"
#include "wang/solve.hpp"

namespace wang {

enum class Player { Exists, ForAll };

// Block length, possibly symbolic in n: expo(two_count, base) where the base
// is n or an integer literal. Covers the lengths 3, n, 2^n, 2^2^n.
struct LenExpr {
    int two_count = 0;
    bool uses_n = false;
    std::int64_t literal = 1;

    std::int64_t value(std::int64_t n) const;

    friend bool operator==(const LenExpr& a, const LenExpr& b) {
        return a.two_count == b.two_count && a.uses_n == b.uses_n &&
               (a.uses_n || a.literal == b.literal);
    }
};

struct SeqBlock {
    Player player = Player::Exists;
    LenExpr length;

    friend bool operator==(const SeqBlock& a, const SeqBlock& b) {
        return a.player == b.player && a.length == b.length;
    }
};

// Abstract ownership pattern of rows: a finite prefix of blocks, optionally
// followed by a block list cycled forever.
struct PlayerSequence {
    std::vector<SeqBlock> prefix;
    std::vector<SeqBlock> repeat;

    friend bool operator==(const PlayerSequence& a, const PlayerSequence& b) {
        return a.prefix == b.prefix && a.repeat == b.repeat;
    }
};

// Mini-grammar: blocks E, A, E^3, A^n, E^2^n; a parenthesized group may carry
// a ^<int> repetition which is expanded immediately; a trailing * on the final
// group or block cycles it forever. Examples: "(EA)*", "E*", "E^n(A^nE^n)^2",
// "(E^2^nA^2^n)*".
PlayerSequence parse_sequence(const std::string& text);
std::string sequence_to_text(const PlayerSequence& seq);

struct ResolvedSequence {
    std::vector<std::pair<Player, std::int64_t>> prefix;
    std::vector<std::pair<Player, std::int64_t>> repeat;
    std::int64_t prefix_rows = 0;
    std::int64_t repeat_rows = 0;

    bool finite() const { return repeat_rows == 0; }
    // Owner of the 1-based row; throws std::out_of_range past a finite sequence.
    Player owner(std::int64_t row) const;
};

ResolvedSequence resolve_sequence(const PlayerSequence& seq, std::int64_t n);

// Positional strategy for player E. Fixed-height games key on the number of
// rows already placed; arbitrary-height games key on the phase within the
// resolved sequence. A missing frontier is the empty board.
struct StrategyKey {
    std::int64_t at = 0;
    std::optional<RowState> frontier;

    friend bool operator<(const StrategyKey& a, const StrategyKey& b) {
        if (a.at != b.at) return a.at < b.at;
        if (a.frontier.has_value() != b.frontier.has_value()) return !a.frontier.has_value();
        if (!a.frontier) return false;
        return *a.frontier < *b.frontier;
    }
};

struct Strategy {
    bool arbitrary_height = false;
    std::map<StrategyKey, RowState> moves;
};

struct GameResult {
    bool exists_wins = false;
    std::optional<Strategy> strategy;
    SolveStats stats;
};

// Two-player row game. Players alternate per the sequence; a move adds one row
// satisfying every constraint decidable at that point (horizontal validity,
// vertical match, white top and the seed on row 1, white bottoms on the last
// row of a fixed-height game). A player unable to move loses the game for E
// whenever the rectangle is incomplete: any stalled play is a win for A.
//
// Fixed height: E wins a play when all H rows are placed; solved by backward
// induction over (rows placed, frontier). Arbitrary height: E wins as soon as
// a placed row has all-white bottoms, infinite play is a win for A; solved as
// a reachability game by an attractor fixpoint over (phase, frontier).
GameResult solve_game(const TilingInstance& instance, const PlayerSequence& seq,
                      const SearchBudget& budget = {});

enum class VerifyOutcome { Pass, Fail, Inconclusive };

struct VerifyReport {
    VerifyOutcome outcome = VerifyOutcome::Pass;
    std::string detail;
};

// Plays every A response against the strategy (up to the node budget) and
// confirms that each play reaches the win condition.
VerifyReport verify_strategy(const TilingInstance& instance, const PlayerSequence& seq,
                             const Strategy& strategy,
                             std::uint64_t adversary_budget = 1'000'000);

// Strategy files: {"kind":"fixed"|"arbitrary","entries":[{"at":k,
// "frontier":[tile...]|null,"play":[tile...]}]}. Frontiers and plays are
// spelled as full tile objects; parsing maps them back into the set.
std::string strategy_to_json(const Strategy& strategy, const TileSet& set);
Strategy strategy_from_json(const std::string& text, const TileSet& set);

}  // namespace wang
