#include "wang/game.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace wang {

std::int64_t LenExpr::value(std::int64_t n) const {
    const std::int64_t base = uses_n ? n : literal;
    if (base < 0) throw std::invalid_argument("block length base must be nonnegative");
    const std::uint64_t v = expo(two_count, static_cast<std::uint64_t>(base));
    if (v > static_cast<std::uint64_t>(INT64_MAX)) {
        throw std::overflow_error("block length does not fit in 64 bits");
    }
    if (v == 0) throw std::invalid_argument("block length must resolve to a positive integer");
    return static_cast<std::int64_t>(v);
}

namespace {

class SeqParser {
public:
    explicit SeqParser(const std::string& text) : text_(text) {}

    PlayerSequence parse() {
        PlayerSequence seq;
        skip_space();
        while (!at_end()) {
            if (peek() == '(') {
                std::vector<SeqBlock> group = parse_group();
                skip_space();
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    require_end("'*' must end the sequence");
                    seq.repeat = std::move(group);
                    break;
                }
                std::int64_t times = 1;
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    times = parse_int();
                    if (times < 0) fail("group repetition must be nonnegative");
                }
                for (std::int64_t i = 0; i < times; ++i) {
                    seq.prefix.insert(seq.prefix.end(), group.begin(), group.end());
                }
            } else {
                SeqBlock block = parse_block();
                skip_space();
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    require_end("'*' must end the sequence");
                    seq.repeat = {block};
                    break;
                }
                seq.prefix.push_back(block);
            }
            skip_space();
        }
        if (seq.prefix.empty() && seq.repeat.empty()) fail("empty player sequence");
        return seq;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("player sequence: " + what + " (at offset " +
                                    std::to_string(pos_) + " of '" + text_ + "')");
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    void require_end(const std::string& what) {
        skip_space();
        if (!at_end()) fail(what);
    }

    std::int64_t parse_int() {
        skip_space();
        if (at_end() || !isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (!at_end() && isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > INT64_MAX / 16) fail("integer too large");
        }
        return v;
    }

    // exponent := 'n' | INT | '2' '^' exponent
    LenExpr parse_exponent() {
        skip_space();
        if (at_end()) fail("expected an exponent");
        if (peek() == 'n') {
            ++pos_;
            LenExpr e;
            e.uses_n = true;
            return e;
        }
        const std::int64_t v = parse_int();
        skip_space();
        if (!at_end() && peek() == '^') {
            if (v != 2) fail("only 2 can be a tower base");
            ++pos_;
            LenExpr inner = parse_exponent();
            inner.two_count += 1;
            return inner;
        }
        LenExpr e;
        e.literal = v;
        return e;
    }

    SeqBlock parse_block() {
        skip_space();
        if (at_end() || (peek() != 'E' && peek() != 'A')) fail("expected 'E' or 'A'");
        SeqBlock block;
        block.player = peek() == 'E' ? Player::Exists : Player::ForAll;
        ++pos_;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            block.length = parse_exponent();
        }
        return block;
    }

    std::vector<SeqBlock> parse_group() {
        ++pos_;  // '('
        std::vector<SeqBlock> blocks;
        skip_space();
        while (!at_end() && peek() != ')') {
            blocks.push_back(parse_block());
            skip_space();
        }
        if (at_end()) fail("unterminated group");
        ++pos_;  // ')'
        if (blocks.empty()) fail("empty group");
        return blocks;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string block_to_text(const SeqBlock& block) {
    std::string out(block.player == Player::Exists ? "E" : "A");
    const LenExpr& len = block.length;
    if (len.two_count == 0 && !len.uses_n && len.literal == 1) return out;
    out += "^";
    for (int i = 0; i < len.two_count; ++i) out += "2^";
    out += len.uses_n ? "n" : std::to_string(len.literal);
    return out;
}

}  // namespace

PlayerSequence parse_sequence(const std::string& text) { return SeqParser(text).parse(); }

std::string sequence_to_text(const PlayerSequence& seq) {
    std::string out;
    for (const SeqBlock& b : seq.prefix) out += block_to_text(b);
    if (!seq.repeat.empty()) {
        out += "(";
        for (const SeqBlock& b : seq.repeat) out += block_to_text(b);
        out += ")*";
    }
    return out;
}

ResolvedSequence resolve_sequence(const PlayerSequence& seq, std::int64_t n) {
    if (seq.prefix.empty() && seq.repeat.empty()) {
        throw std::invalid_argument("player sequence has no blocks");
    }
    ResolvedSequence out;
    for (const SeqBlock& b : seq.prefix) {
        out.prefix.emplace_back(b.player, b.length.value(n));
        out.prefix_rows += out.prefix.back().second;
    }
    for (const SeqBlock& b : seq.repeat) {
        out.repeat.emplace_back(b.player, b.length.value(n));
        out.repeat_rows += out.repeat.back().second;
    }
    return out;
}

Player ResolvedSequence::owner(std::int64_t row) const {
    if (row < 1) throw std::invalid_argument("row indices start at 1");
    std::int64_t offset = row - 1;
    if (offset < prefix_rows) {
        for (const auto& [player, len] : prefix) {
            if (offset < len) return player;
            offset -= len;
        }
    }
    if (repeat_rows == 0) {
        throw std::out_of_range("row " + std::to_string(row) +
                                " lies beyond the finite player sequence");
    }
    offset = (offset - prefix_rows) % repeat_rows;
    for (const auto& [player, len] : repeat) {
        if (offset < len) return player;
        offset -= len;
    }
    throw std::logic_error("unreachable: resolved sequence blocks are exhaustive");
}

namespace {

struct NodeKey {
    std::int64_t at;
    std::optional<RowState> frontier;

    friend bool operator==(const NodeKey& a, const NodeKey& b) {
        return a.at == b.at && a.frontier == b.frontier;
    }
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = std::hash<std::int64_t>{}(k.at);
        if (k.frontier) h = h * 1099511628211ull + RowStateHash{}(*k.frontier);
        return h;
    }
};

RowConstraints move_constraints(const TilingInstance& instance, const TileSet& set,
                                const std::optional<RowState>& frontier, bool last_fixed_row) {
    RowConstraints c;
    if (!frontier) {
        c.top_white = true;
        c.first_tile = instance.seed;
    } else {
        c.required_top = row_bottom_colors(set, *frontier);
    }
    if (last_fixed_row) c.bottom_white = true;
    return c;
}

// Backward induction for fixed-height games.
class FixedGameSolver {
public:
    FixedGameSolver(const TilingInstance& instance, const ResolvedSequence& seq,
                    const SearchBudget& budget)
        : instance_(instance),
          set_(instance.tile_set),
          seq_(seq),
          h_(instance.height.rows),
          budget_(budget) {}

    GameResult run() {
        // The sequence must cover every row of the rectangle.
        for (std::int64_t row = 1; row <= h_; ++row) (void)seq_.owner(row);

        GameResult result;
        result.exists_wins = value(0, std::nullopt);
        if (result.exists_wins) {
            strategy_.arbitrary_height = false;
            result.strategy = std::move(strategy_);
        }
        result.stats.rows_explored = nodes_;
        result.stats.states_memoized = memo_.size();
        return result;
    }

private:
    bool value(std::int64_t placed, const std::optional<RowState>& frontier) {
        if (placed == h_) return true;
        const NodeKey key{placed, frontier};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const Player mover = seq_.owner(placed + 1);
        const RowConstraints constraints =
            move_constraints(instance_, set_, frontier, placed + 1 == h_);
        RowEnumerator stream(set_, instance_.width, constraints);
        bool result = mover == Player::ForAll;  // AND starts true, OR starts false
        bool any_move = false;
        while (auto row = stream.next()) {
            if (++nodes_ > budget_.max_nodes) throw BudgetExceeded(nodes_);
            any_move = true;
            const bool child = value(placed + 1, *row);
            if (mover == Player::Exists && child) {
                strategy_.moves.emplace(StrategyKey{placed, frontier}, *row);
                result = true;
                break;
            }
            if (mover == Player::ForAll && !child) {
                result = false;
                break;
            }
        }
        if (!any_move) result = false;  // a stalled play is a win for A
        memo_.emplace(key, result);
        return result;
    }

    const TilingInstance& instance_;
    const TileSet& set_;
    const ResolvedSequence& seq_;
    std::int64_t h_;
    const SearchBudget& budget_;
    std::unordered_map<NodeKey, bool, NodeKeyHash> memo_;
    Strategy strategy_;
    std::uint64_t nodes_ = 0;
};

// Reachability game for arbitrary-height instances: explore the (phase,
// frontier) graph forward, then pull back the attractor of the immediate-win
// moves. E wins from a node of theirs with any move into the attractor; A is
// attracted only when every available move is, and at least one move exists.
class ArbitraryGameSolver {
public:
    ArbitraryGameSolver(const TilingInstance& instance, const ResolvedSequence& seq,
                        const SearchBudget& budget)
        : instance_(instance), set_(instance.tile_set), seq_(seq), budget_(budget) {}

    GameResult run() {
        const int start = intern_node(NodeKey{0, std::nullopt});
        for (std::size_t i = 0; i < nodes_.size(); ++i) expand(static_cast<int>(i));

        // Counting attractor over the explored graph.
        std::vector<int> pending(nodes_.size(), 0);
        std::vector<bool> attracted(nodes_.size(), false);
        std::vector<int> worklist;
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            pending[v] = static_cast<int>(moves_[v].size());
            if (movers_[v] == Player::Exists) {
                for (const Move& m : moves_[v]) {
                    if (m.immediate_win) {
                        attract(static_cast<int>(v), m, attracted, worklist);
                        break;
                    }
                }
            } else if (!moves_[v].empty()) {
                int wins = 0;
                for (const Move& m : moves_[v]) wins += m.immediate_win ? 1 : 0;
                pending[v] -= wins;
                if (pending[v] == 0) attract(static_cast<int>(v), moves_[v][0], attracted, worklist);
            }
        }
        for (std::size_t head = 0; head < worklist.size(); ++head) {
            const int won = worklist[head];
            for (const auto& [pred, move_index] : predecessors_[static_cast<std::size_t>(won)]) {
                if (attracted[static_cast<std::size_t>(pred)]) continue;
                if (movers_[static_cast<std::size_t>(pred)] == Player::Exists) {
                    attract(pred, moves_[static_cast<std::size_t>(pred)][move_index], attracted,
                            worklist);
                } else if (--pending[static_cast<std::size_t>(pred)] == 0) {
                    attract(pred, moves_[static_cast<std::size_t>(pred)][0], attracted, worklist);
                }
            }
        }

        GameResult result;
        result.exists_wins = attracted[static_cast<std::size_t>(start)];
        if (result.exists_wins) {
            Strategy strategy;
            strategy.arbitrary_height = true;
            for (std::size_t v = 0; v < nodes_.size(); ++v) {
                if (attracted[v] && movers_[v] == Player::Exists && chosen_[v] >= 0) {
                    strategy.moves.emplace(
                        StrategyKey{nodes_[v].at, nodes_[v].frontier},
                        moves_[v][static_cast<std::size_t>(chosen_[v])].row);
                }
            }
            result.strategy = std::move(strategy);
        }
        result.stats.rows_explored = generated_;
        result.stats.states_memoized = nodes_.size();
        return result;
    }

private:
    struct Move {
        RowState row;
        bool immediate_win = false;
        int to = -1;  // node id when not an immediate win
    };

    std::int64_t next_phase(std::int64_t phase) const {
        std::int64_t next = phase + 1;
        if (seq_.repeat_rows > 0 && next >= seq_.prefix_rows + seq_.repeat_rows) {
            next = seq_.prefix_rows;
        }
        return next;
    }

    int intern_node(const NodeKey& key) {
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const int id = static_cast<int>(nodes_.size());
        if (nodes_.size() >= budget_.max_nodes) throw BudgetExceeded(nodes_.size());
        index_.emplace(key, id);
        nodes_.push_back(key);
        movers_.push_back(Player::Exists);
        moves_.emplace_back();
        predecessors_.emplace_back();
        chosen_.push_back(-1);
        return id;
    }

    void expand(int v) {
        const NodeKey key = nodes_[static_cast<std::size_t>(v)];
        Player mover;
        try {
            mover = seq_.owner(key.at + 1);
        } catch (const std::out_of_range&) {
            return;  // finite sequence exhausted: no moves, the play stalls
        }
        movers_[static_cast<std::size_t>(v)] = mover;
        const RowConstraints constraints = move_constraints(instance_, set_, key.frontier, false);
        RowEnumerator stream(set_, instance_.width, constraints);
        while (auto row = stream.next()) {
            if (++generated_ > budget_.max_nodes) throw BudgetExceeded(generated_);
            Move move;
            move.immediate_win = true;
            for (Color c : row_bottom_colors(set_, *row)) {
                if (!c.is_white()) {
                    move.immediate_win = false;
                    break;
                }
            }
            move.row = std::move(*row);
            if (!move.immediate_win) {
                move.to = intern_node(NodeKey{next_phase(key.at), move.row});
                predecessors_[static_cast<std::size_t>(move.to)].emplace_back(
                    v, static_cast<int>(moves_[static_cast<std::size_t>(v)].size()));
            }
            moves_[static_cast<std::size_t>(v)].push_back(std::move(move));
        }
    }

    void attract(int v, const Move& via, std::vector<bool>& attracted,
                 std::vector<int>& worklist) {
        attracted[static_cast<std::size_t>(v)] = true;
        if (movers_[static_cast<std::size_t>(v)] == Player::Exists) {
            for (std::size_t m = 0; m < moves_[static_cast<std::size_t>(v)].size(); ++m) {
                if (&moves_[static_cast<std::size_t>(v)][m] == &via) {
                    chosen_[static_cast<std::size_t>(v)] = static_cast<int>(m);
                    break;
                }
            }
        }
        worklist.push_back(v);
    }

    const TilingInstance& instance_;
    const TileSet& set_;
    const ResolvedSequence& seq_;
    const SearchBudget& budget_;
    std::vector<NodeKey> nodes_;
    std::unordered_map<NodeKey, int, NodeKeyHash> index_;
    std::vector<Player> movers_;
    std::vector<std::vector<Move>> moves_;
    std::vector<std::vector<std::pair<int, int>>> predecessors_;  // (node, move index)
    std::vector<int> chosen_;
    std::uint64_t generated_ = 0;
};

}  // namespace

GameResult solve_game(const TilingInstance& instance, const PlayerSequence& seq,
                      const SearchBudget& budget) {
    instance.check();
    const ResolvedSequence resolved = resolve_sequence(seq, instance.n);
    if (instance.height.is_fixed) {
        return FixedGameSolver(instance, resolved, budget).run();
    }
    return ArbitraryGameSolver(instance, resolved, budget).run();
}

namespace {

class StrategyVerifier {
public:
    StrategyVerifier(const TilingInstance& instance, const ResolvedSequence& seq,
                     const Strategy& strategy, std::uint64_t budget)
        : instance_(instance),
          set_(instance.tile_set),
          seq_(seq),
          strategy_(strategy),
          budget_(budget) {}

    VerifyReport run() {
        VerifyReport report;
        try {
            const bool ok = play(0, std::nullopt, report);
            if (ok) report.outcome = VerifyOutcome::Pass;
        } catch (const BudgetExceeded&) {
            report.outcome = VerifyOutcome::Inconclusive;
            report.detail = "adversary budget exhausted";
        }
        return report;
    }

private:
    bool fixed() const { return instance_.height.is_fixed; }

    std::int64_t phase_of(std::int64_t placed) const {
        if (fixed() || seq_.repeat_rows == 0 || placed < seq_.prefix_rows) return placed;
        return seq_.prefix_rows + (placed - seq_.prefix_rows) % seq_.repeat_rows;
    }

    bool fail(VerifyReport& report, std::int64_t placed, const std::string& what) {
        report.outcome = VerifyOutcome::Fail;
        report.detail = "after " + std::to_string(placed) + " rows: " + what;
        return false;
    }

    bool play(std::int64_t placed, std::optional<RowState> frontier, VerifyReport& report) {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
        if (fixed() && placed == instance_.height.rows) return true;

        Player mover;
        try {
            mover = seq_.owner(placed + 1);
        } catch (const std::out_of_range&) {
            return fail(report, placed, "the player sequence ran out before the game ended");
        }
        const bool last_fixed = fixed() && placed + 1 == instance_.height.rows;
        const RowConstraints constraints = move_constraints(instance_, set_, frontier, last_fixed);

        if (mover == Player::Exists) {
            const StrategyKey key{phase_of(placed), frontier};
            auto it = strategy_.moves.find(key);
            if (it == strategy_.moves.end()) {
                return fail(report, placed, "strategy has no entry for this E position");
            }
            const RowState& row = it->second;
            if (row.width() != instance_.width || !row_satisfies(set_, row, constraints)) {
                return fail(report, placed, "strategy plays an illegal row");
            }
            return descend(placed, row, report);
        }

        RowEnumerator stream(set_, instance_.width, constraints);
        bool any = false;
        while (auto row = stream.next()) {
            any = true;
            if (!descend(placed, *row, report)) return false;
        }
        if (!any) {
            return fail(report, placed, "player A is stalled and the rectangle is incomplete");
        }
        return true;
    }

    bool descend(std::int64_t placed, const RowState& row, VerifyReport& report) {
        if (!fixed()) {
            bool win = true;
            for (Color c : row_bottom_colors(set_, row)) win = win && c.is_white();
            if (win) return true;
            const NodeKey node{phase_of(placed + 1), row};
            if (!on_path_.insert(node).second) {
                return fail(report, placed + 1, "play revisits a position, so it never ends");
            }
            const bool ok = play(placed + 1, row, report);
            on_path_.erase(node);
            return ok;
        }
        return play(placed + 1, row, report);
    }

    const TilingInstance& instance_;
    const TileSet& set_;
    const ResolvedSequence& seq_;
    const Strategy& strategy_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::unordered_set<NodeKey, NodeKeyHash> on_path_;
};

}  // namespace

VerifyReport verify_strategy(const TilingInstance& instance, const PlayerSequence& seq,
                             const Strategy& strategy, std::uint64_t adversary_budget) {
    instance.check();
    const ResolvedSequence resolved = resolve_sequence(seq, instance.n);
    return StrategyVerifier(instance, resolved, strategy, adversary_budget).run();
}

std::string strategy_to_json(const Strategy& strategy, const TileSet& set) {
    nlohmann::json j;
    j["kind"] = strategy.arbitrary_height ? "arbitrary" : "fixed";
    j["entries"] = nlohmann::json::array();
    auto tile_json = [](const TileType& t) {
        nlohmann::json tj;
        tj["left"] = std::string(t.left.name());
        tj["top"] = std::string(t.top.name());
        tj["right"] = std::string(t.right.name());
        tj["bottom"] = std::string(t.bottom.name());
        return tj;
    };
    auto row_json = [&](const RowState& row) {
        nlohmann::json rj = nlohmann::json::array();
        for (const TileType& t : row.materialize(set)) rj.push_back(tile_json(t));
        return rj;
    };
    for (const auto& [key, row] : strategy.moves) {
        nlohmann::json entry;
        entry["at"] = key.at;
        entry["frontier"] = key.frontier ? row_json(*key.frontier) : nlohmann::json(nullptr);
        entry["play"] = row_json(row);
        j["entries"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

Strategy strategy_from_json(const std::string& text, const TileSet& set) {
    nlohmann::json j = nlohmann::json::parse(text);
    Strategy strategy;
    strategy.arbitrary_height = j.at("kind").get<std::string>() == "arbitrary";
    auto tile_from = [](const nlohmann::json& tj) {
        return TileType{Color::intern(tj.at("left").get<std::string>()),
                        Color::intern(tj.at("top").get<std::string>()),
                        Color::intern(tj.at("right").get<std::string>()),
                        Color::intern(tj.at("bottom").get<std::string>())};
    };
    auto row_from = [&](const nlohmann::json& rj) {
        RowState row;
        for (const nlohmann::json& tj : rj) {
            auto index = set.index_of(tile_from(tj));
            if (!index) throw std::invalid_argument("strategy row tile is not in the tile set");
            row.tiles.push_back(*index);
        }
        return row;
    };
    for (const nlohmann::json& entry : j.at("entries")) {
        StrategyKey key;
        key.at = entry.at("at").get<std::int64_t>();
        if (!entry.at("frontier").is_null()) key.frontier = row_from(entry.at("frontier"));
        strategy.moves.emplace(key, row_from(entry.at("play")));
    }
    return strategy;
}

}  // namespace wang
