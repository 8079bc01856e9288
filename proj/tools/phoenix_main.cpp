#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phoenix/chess.hpp"
#include "phoenix/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Phoenix: a self-optimizing chess engine"};
    app.require_subcommand(1);

    auto* train = app.add_subcommand("train", "evolve positional value tables by self-play");
    std::string config_path;
    int jobs = 0;
    train->add_option("--config", config_path, "training configuration file")->required();
    train->add_option("--jobs", jobs, "worker count for games (0 = hardware)");

    auto* uci = app.add_subcommand("uci", "run as a UCI engine on stdin/stdout");
    std::string store_path, chromosome_id;
    uci->add_option("--store", store_path, "chromosome store (.pvt)");
    uci->add_option("--chromosome", chromosome_id, "chromosome id within the store");

    auto* match = app.add_subcommand("match", "play one engine configuration against another");
    phoenix::MatchArgs margs;
    match->add_option("--white", margs.white_spec, "zero | random[:seed] | store:<path>#<id>")
        ->required();
    match->add_option("--black", margs.black_spec, "zero | random[:seed] | store:<path>#<id>")
        ->required();
    match->add_option("--games", margs.games, "number of games")->required();
    int match_depth = 0;
    int64_t match_movetime = 0;
    match->add_option("--depth", match_depth, "fixed search depth per move");
    match->add_option("--movetime", match_movetime, "milliseconds per move");
    match->add_option("--pgn", margs.pgn_path, "PGN output path")->required();
    match->add_option("--opponent-elo", margs.opponent_elo, "opponent rating for the report");
    match->add_option("--openings", margs.openings, "opening set: builtin | startpos");
    match->add_option("--seed", margs.seed, "match seed");
    match->add_option("--jobs", margs.jobs, "worker count for games (0 = hardware)");

    auto* rate = app.add_subcommand("rate", "performance rating from a PGN file");
    std::string rate_pgn, rate_subject;
    double rate_elo = 0.0;
    rate->add_option("--pgn", rate_pgn, "PGN file")->required();
    rate->add_option("--subject", rate_subject, "player name to rate")->required();
    rate->add_option("--opponent-elo", rate_elo, "opponent rating")->required();

    auto* perft = app.add_subcommand("perft", "legal move tree node count");
    std::string perft_fen = "startpos";
    int perft_depth = 1;
    perft->add_option("--fen", perft_fen, "FEN string or 'startpos'");
    perft->add_option("--depth", perft_depth, "depth in plies")->required();

    auto* demo = app.add_subcommand("mnc-demo", "run the optimizer on a 1-D benchmark");
    std::string demo_function = "sinx2";
    int demo_generations = 200;
    uint64_t demo_seed = 1;
    int demo_population = 20;
    std::string demo_csv;
    demo->add_option("--function", demo_function, "benchmark name");
    demo->add_option("--generations", demo_generations, "generation count (0: initial report)");
    demo->add_option("--seed", demo_seed, "random seed");
    demo->add_option("--population", demo_population, "population size");
    demo->add_option("--csv", demo_csv, "per-generation metrics CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed()) return phoenix::cmd_train(config_path, jobs, std::cout);
        if (uci->parsed()) return phoenix::cmd_uci(store_path, chromosome_id);
        if (match->parsed()) {
            if (match_depth > 0) margs.depth = match_depth;
            if (match_movetime > 0) margs.movetime_ms = match_movetime;
            return phoenix::cmd_match(margs, std::cout);
        }
        if (rate->parsed()) return phoenix::cmd_rate(rate_pgn, rate_subject, rate_elo, std::cout);
        if (perft->parsed()) return phoenix::cmd_perft(perft_fen, perft_depth, std::cout);
        if (demo->parsed())
            return phoenix::cmd_mnc_demo(demo_function, demo_generations, demo_seed,
                                         demo_population, demo_csv, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
