#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wang/core.hpp"
#include "wang/det.hpp"
#include "wang/fo.hpp"
#include "wang/game.hpp"
#include "wang/gen.hpp"
#include "wang/json_io.hpp"
#include "wang/render.hpp"
#include "wang/solve.hpp"
#include "wang/tmred.hpp"
#include "wang/width1.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
    bool machine_readable = false;
    std::uint64_t budget = 10'000'000;
};

void emit(const Options& opt, const std::string& human, const json& payload) {
    if (opt.machine_readable) {
        std::cout << payload.dump() << "\n";
    } else {
        std::cout << human << "\n";
    }
}

wang::TilingInstance load_instance(const std::string& path) {
    return wang::instance_from_json(wang::read_file(path));
}

void apply_seed_flags(wang::TilingInstance& instance, std::optional<int> seed_index,
                      bool seed_free) {
    if (seed_free) {
        instance.seed.reset();
        return;
    }
    if (seed_index) {
        if (*seed_index < 0 || *seed_index >= static_cast<int>(instance.tile_set.size())) {
            throw std::invalid_argument("--seed-index out of range (0-based tile index)");
        }
        instance.seed = instance.tile_set[static_cast<std::size_t>(*seed_index)];
    }
}

json tile_json(const wang::TileType& t) {
    return json{{"left", std::string(t.left.name())},
                {"top", std::string(t.top.name())},
                {"right", std::string(t.right.name())},
                {"bottom", std::string(t.bottom.name())}};
}

int report_solve(const Options& opt, const wang::SolveResult& result,
                 const std::string& witness_path) {
    if (result.witness && !witness_path.empty()) {
        wang::write_file(witness_path, wang::tiling_to_json(*result.witness));
    }
    json payload{{"result", result.exists ? "yes" : "no"},
                 {"rows_explored", result.stats.rows_explored},
                 {"states_memoized", result.stats.states_memoized}};
    emit(opt, result.exists ? "yes" : "no", payload);
    return result.exists ? kExitYes : kExitNo;
}

wang::NormalizedTM load_tm(const std::string& path) {
    const wang::TMDescription desc = wang::parse_tm(wang::read_file(path));
    wang::NormalizationCheck check = wang::check_normalized(desc);
    if (!check.machine) {
        std::string what = "machine is not normalized:";
        for (const std::string& v : check.violations) what += "\n  " + v;
        throw std::invalid_argument(what);
    }
    return std::move(*check.machine);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wang tiling workbench: solvers, reductions, games"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.machine_readable, "machine-readable results on stdout");
    app.add_option("--budget", opt.budget, "search node budget")->capture_default_str();

    std::string tileset_path, tm_path, in_path, out_path, witness_path, strategy_path;
    std::string input_word, seq_text, format = "ascii", family_name;
    std::optional<int> seed_index;
    bool seed_free = false, any_height = false, with_seed = false, explain = false;
    int width = 0, height = 0, max_steps = 100, max_cells = 0, cell_size = 40, gen_k = 1;
    std::int64_t n_param = 0;

    auto* solve = app.add_subcommand("solve", "decide tiling existence");
    solve->add_option("--tileset", tileset_path)->required();
    solve->add_option("--seed-index", seed_index, "0-based tile index used as the seed");
    solve->add_flag("--seed-free", seed_free, "drop the seed constraint");
    solve->add_option("--width", width);
    solve->add_option("--height", height);
    solve->add_flag("--any-height", any_height);
    solve->add_option("--witness", witness_path, "write the witness tiling as JSON");

    auto* det_check = app.add_subcommand("det-check", "test the deterministic-set property");
    det_check->add_option("--tileset", tileset_path)->required();
    det_check->add_flag("--explain", explain, "print the partition or counterexample");

    auto* complete = app.add_subcommand("complete", "deterministic Boustrophedon completion");
    complete->add_option("--tileset", tileset_path)->required();
    complete->add_option("--seed-index", seed_index);
    complete->add_option("--height", height)->required();
    complete->add_option("--width", width)->required();
    complete->add_option("--witness", witness_path);

    auto* game = app.add_subcommand("game", "two-player row game");
    game->add_option("--tileset", tileset_path)->required();
    game->add_option("--seed-index", seed_index);
    game->add_flag("--seed-free", seed_free);
    game->add_option("--width", width);
    game->add_option("--height", height);
    game->add_flag("--any-height", any_height);
    game->add_option("--seq", seq_text, "player sequence, e.g. \"(EA)*\"")->required();
    game->add_option("--n", n_param, "binds symbolic block lengths");
    game->add_option("--strategy", strategy_path, "write the winning strategy as JSON");

    auto* compile_tm = app.add_subcommand("compile-tm", "compile a machine run into tiles");
    compile_tm->add_option("--tm", tm_path)->required();
    compile_tm->add_option("--input", input_word);
    compile_tm->add_option("--width", width)->required();
    compile_tm->add_option("--out", out_path)->required();

    auto* simulate = app.add_subcommand("simulate", "run a normalized machine");
    simulate->add_option("--tm", tm_path)->required();
    simulate->add_option("--input", input_word);
    simulate->add_option("--max-steps", max_steps)->capture_default_str();
    simulate->add_option("--max-cells", max_cells, "defaults to max-steps + input length");

    auto* reduce_graph = app.add_subcommand("reduce-graph", "digraph reachability to width-1 tiles");
    reduce_graph->add_option("--in", in_path)->required();
    reduce_graph->add_option("--out", out_path)->required();

    auto* reduce_tiles = app.add_subcommand("reduce-tiles",
                                            "rotation-closed width-1 tiles to undirected graph");
    reduce_tiles->add_option("--in", in_path)->required();
    reduce_tiles->add_option("--out", out_path)->required();
    reduce_tiles->add_option("--height", height, "overrides the height stored in the instance");

    auto* fo = app.add_subcommand("fo", "emit the constant-size first-order formula");
    fo->add_option("--height", height)->required();
    fo->add_option("--width", width)->required();
    fo->add_flag("--seed", with_seed);

    auto* fo_eval = app.add_subcommand("fo-eval", "evaluate the formula over a tile set");
    fo_eval->add_option("--tileset", tileset_path)->required();
    fo_eval->add_option("--height", height)->required();
    fo_eval->add_option("--width", width)->required();
    fo_eval->add_flag("--seed", with_seed, "use the tile set's seed");

    auto* render = app.add_subcommand("render", "render a tiling");
    render->add_option("--in", in_path, "tiling JSON (e.g. a solve witness)")->required();
    render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--cell-size", cell_size)->capture_default_str();
    render->add_option("--out", out_path, "write to a file instead of stdout");

    auto* gen = app.add_subcommand("gen", "generate benchmark instances");
    gen->add_option("--family", family_name, "square-n | exp-ladder | line-n | game-alt")
        ->required();
    gen->add_option("--n", n_param)->required();
    gen->add_option("--k", gen_k)->capture_default_str();
    gen->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        const wang::SearchBudget budget{opt.budget};

        if (*solve) {
            wang::TilingInstance instance = load_instance(tileset_path);
            apply_seed_flags(instance, seed_index, seed_free);
            if (width > 0) instance.width = width;
            if (any_height) instance.height = wang::HeightSpec::arbitrary();
            if (height > 0) instance.height = wang::HeightSpec::fixed(height);
            const wang::SolveResult result = instance.height.is_fixed
                                                 ? wang::solve_fixed(instance, budget)
                                                 : wang::solve_arbitrary(instance, budget);
            return report_solve(opt, result, witness_path);
        }

        if (*det_check) {
            const wang::TilingInstance instance = load_instance(tileset_path);
            const wang::DeterminismCertificate cert =
                wang::detect_deterministic(instance.tile_set);
            json payload{{"deterministic", cert.deterministic}};
            std::string human = cert.deterministic ? "deterministic" : "not deterministic";
            if (cert.deterministic && explain) {
                json classes = json::object();
                for (const auto& [color, cls] : cert.partition->entries()) {
                    classes[std::string(color.name())] =
                        cls == wang::ColorClass::One ? "ONE" : "TWO";
                }
                payload["partition"] = classes;
                human += "\npartition:";
                for (const auto& [color, cls] : cert.partition->entries()) {
                    human += "\n  " + std::string(color.name()) + " : " +
                             (cls == wang::ColorClass::One ? "ONE" : "TWO");
                }
            }
            if (!cert.deterministic && explain) {
                payload["counterexample"] = cert.counterexample->summary;
                human += "\n" + cert.counterexample->summary;
                for (const std::string& step : cert.counterexample->steps) {
                    human += "\n  " + step;
                }
            }
            emit(opt, human, payload);
            return cert.deterministic ? kExitYes : kExitNo;
        }

        if (*complete) {
            wang::TilingInstance instance = load_instance(tileset_path);
            apply_seed_flags(instance, seed_index, false);
            if (!instance.seed) throw std::invalid_argument("complete needs a seed tile");
            const wang::DeterminismCertificate cert =
                wang::detect_deterministic(instance.tile_set);
            if (!cert.deterministic) {
                std::cerr << "tile set is not deterministic: " << cert.counterexample->summary
                          << "\n";
                return kExitError;
            }
            const wang::CompletionResult completion = wang::boustrophedon_complete(
                instance.tile_set, cert, *instance.seed, height, width);
            if (completion.result.witness && !witness_path.empty()) {
                wang::write_file(witness_path,
                                 wang::tiling_to_json(*completion.result.witness));
            }
            json payload{{"result", completion.result.exists ? "yes" : "no"}};
            std::string human = completion.result.exists ? "yes" : "no";
            if (completion.stuck_at) {
                payload["stuck_at"] = {{"row", completion.stuck_at->row},
                                       {"col", completion.stuck_at->col}};
                human += " (stuck at row " + std::to_string(completion.stuck_at->row) +
                         ", column " + std::to_string(completion.stuck_at->col) + ")";
            }
            emit(opt, human, payload);
            return completion.result.exists ? kExitYes : kExitNo;
        }

        if (*game) {
            wang::TilingInstance instance = load_instance(tileset_path);
            apply_seed_flags(instance, seed_index, seed_free);
            if (width > 0) instance.width = width;
            if (any_height) instance.height = wang::HeightSpec::arbitrary();
            if (height > 0) instance.height = wang::HeightSpec::fixed(height);
            if (n_param > 0) instance.n = n_param;
            const wang::PlayerSequence seq = wang::parse_sequence(seq_text);
            const wang::GameResult result = wang::solve_game(instance, seq, budget);
            if (result.strategy && !strategy_path.empty()) {
                wang::write_file(strategy_path,
                                 wang::strategy_to_json(*result.strategy, instance.tile_set));
            }
            json payload{{"result", result.exists_wins ? "yes" : "no"},
                         {"rows_explored", result.stats.rows_explored},
                         {"states_memoized", result.stats.states_memoized}};
            emit(opt, result.exists_wins ? "yes (E has a winning strategy)" : "no",
                 payload);
            return result.exists_wins ? kExitYes : kExitNo;
        }

        if (*compile_tm) {
            const wang::NormalizedTM tm = load_tm(tm_path);
            const wang::CompiledTm compiled =
                wang::compile_tileset(tm, wang::parse_word(input_word), width);
            wang::write_file(out_path,
                             wang::instance_to_json(compiled.square_instance()));
            json payload{{"tiles", compiled.tile_set.size()},
                         {"width", compiled.width},
                         {"out", out_path}};
            emit(opt,
                 "compiled " + std::to_string(compiled.tile_set.size()) + " tiles to " +
                     out_path,
                 payload);
            return kExitYes;
        }

        if (*simulate) {
            const wang::NormalizedTM tm = load_tm(tm_path);
            const std::vector<std::string> word = wang::parse_word(input_word);
            if (max_cells <= 0) max_cells = max_steps + static_cast<int>(word.size()) + 1;
            const wang::SimOutcome outcome = wang::simulate(tm, word, max_steps, max_cells);
            std::string status = outcome.status == wang::RunStatus::Accepted ? "accepted"
                                 : outcome.status == wang::RunStatus::Stuck ? "stuck"
                                                                            : "running";
            json payload{{"status", status},
                         {"steps", outcome.steps},
                         {"condition5_violated", outcome.condition5_violated}};
            std::string human = status + " after " + std::to_string(outcome.steps) + " steps";
            if (!outcome.reason.empty()) human += " (" + outcome.reason + ")";
            if (!opt.machine_readable) {
                for (std::size_t i = 0; i < outcome.trace.size(); ++i) {
                    const wang::TMConfig& c = outcome.trace[i];
                    human += "\n  config " + std::to_string(i + 1) + ": state " + c.state +
                             ", head " + std::to_string(c.head) + ", tape";
                    for (const std::string& s : c.tape) human += " " + s;
                }
            }
            emit(opt, human, payload);
            return outcome.status == wang::RunStatus::Accepted ? kExitYes : kExitNo;
        }

        if (*reduce_graph) {
            const wang::DirectedGraph g = wang::digraph_from_text(wang::read_file(in_path));
            const wang::TilingInstance instance = wang::graph_to_tiles(g);
            wang::write_file(out_path, wang::instance_to_json(instance));
            json payload{{"tiles", instance.tile_set.size()},
                         {"height", instance.height.rows},
                         {"out", out_path}};
            emit(opt,
                 "reduced to " + std::to_string(instance.tile_set.size()) +
                     " tiles, height " + std::to_string(instance.height.rows),
                 payload);
            return kExitYes;
        }

        if (*reduce_tiles) {
            wang::TilingInstance instance = load_instance(in_path);
            if (height > 0) instance.height = wang::HeightSpec::fixed(height);
            const wang::UndirectedGraph g = wang::tiles_to_graph(instance);
            wang::write_file(out_path, wang::ugraph_to_text(g));
            json payload{{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"out", out_path}};
            emit(opt,
                 "reduced to " + std::to_string(g.nodes.size()) + " nodes, " +
                     std::to_string(g.edges.size()) + " edges",
                 payload);
            return kExitYes;
        }

        if (*fo) {
            const wang::FOFormula formula = wang::emit_formula(height, width, with_seed);
            std::cout << wang::formula_to_text(formula) << "\n";
            return kExitYes;
        }

        if (*fo_eval) {
            const wang::TilingInstance instance = load_instance(tileset_path);
            if (with_seed && !instance.seed) {
                throw std::invalid_argument("--seed requires a tile set with a seed entry");
            }
            const wang::FOFormula formula = wang::emit_formula(height, width, with_seed);
            const bool value = wang::evaluate_formula(
                formula, instance.tile_set,
                with_seed ? instance.seed : std::optional<wang::TileType>{});
            emit(opt, value ? "true" : "false", json{{"result", value}});
            return value ? kExitYes : kExitNo;
        }

        if (*render) {
            const wang::Tiling tiling = wang::tiling_from_json(wang::read_file(in_path));
            wang::RenderSpec spec;
            spec.format = format == "svg" ? wang::RenderFormat::Svg : wang::RenderFormat::Ascii;
            spec.cell_size = cell_size;
            const std::string doc = wang::render(tiling, spec);
            if (out_path.empty()) {
                std::cout << doc;
            } else {
                wang::write_file(out_path, doc);
            }
            return kExitYes;
        }

        if (*gen) {
            const wang::Generated generated =
                wang::gen_instance(wang::family_from_name(family_name), n_param, gen_k);
            wang::write_file(out_path, wang::instance_to_json(generated.instance));
            json payload{{"description", generated.description}, {"out", out_path}};
            if (generated.sequence) {
                payload["sequence"] = wang::sequence_to_text(*generated.sequence);
            }
            emit(opt, generated.description + " -> " + out_path, payload);
            return kExitYes;
        }
    } catch (const wang::BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitError;
    } catch (const wang::RuntimeNondeterminism& e) {
        std::cerr << "runtime nondeterminism: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
