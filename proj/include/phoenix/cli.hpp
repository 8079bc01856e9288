#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "phoenix/genome.hpp"
#include "phoenix/mnc.hpp"

namespace phoenix {

// Flat "key = value" training configuration; '#' starts a comment. Every key
// has a default, so an empty file is a valid configuration.
struct TrainConfig {
    MncParams mnc;
    std::string scheme = "random";  // "random" | "roundrobin"
    int min_games = 3;
    int search_depth = 4;
    std::string openings = "builtin";  // "builtin" | "startpos"
    std::string store_path = "phoenix_store.pvt";
    std::string metrics_path = "phoenix_metrics.csv";
    int top_k = 5;

    bool operator==(const TrainConfig&) const = default;

    static TrainConfig parse(std::istream& in);          // throws Error naming the key
    static TrainConfig parse_file(const std::string& path);
    std::string dump() const;  // re-parses to an identical configuration
    void validate() const;
};

// Chromosome specs accepted by cmd_match: "zero", "random", "random:<seed>",
// "store:<path>#<id>".
Chromosome parse_chromosome_spec(const std::string& spec);

struct MatchArgs {
    std::string white_spec;
    std::string black_spec;
    int games = 0;
    std::optional<int> depth;
    std::optional<int64_t> movetime_ms;
    std::string pgn_path;
    double opponent_elo = 0.0;
    std::string openings = "builtin";
    uint64_t seed = 1;
    int jobs = 1;
};

int cmd_train(const std::string& config_path, int jobs, std::ostream& out);
int cmd_uci(const std::string& store_path, const std::string& chromosome_id);
int cmd_match(const MatchArgs& args, std::ostream& out);
int cmd_rate(const std::string& pgn_path, const std::string& subject, double opponent_elo,
             std::ostream& out);
int cmd_perft(const std::string& fen, int depth, std::ostream& out);
int cmd_mnc_demo(const std::string& function_name, int generations, uint64_t seed, int population,
                 const std::string& csv_path, std::ostream& out);

}  // namespace phoenix
