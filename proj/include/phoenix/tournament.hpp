#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "phoenix/chess.hpp"
#include "phoenix/genome.hpp"
#include "phoenix/rng.hpp"
#include "phoenix/search.hpp"

namespace phoenix {

enum class GameOutcome : int8_t { WhiteWin, BlackWin, Draw };

std::string result_string(GameOutcome r);  // "1-0", "0-1", "1/2-1/2"

struct GameRecord {
    std::string white_id;
    std::string black_id;
    int opening_id = 0;
    std::vector<Move> moves;
    GameOutcome result = GameOutcome::Draw;
    GameStatus termination;  // DrawAdjudicated when the ply cap was hit
    uint64_t seed = 0;
};

struct GameConfig {
    SearchLimits limits = SearchLimits::depth(4);
    int max_plies = 300;  // then adjudicated draw
    SearchOptions search{};
};

// Plays one deterministic game between two chromosomes.
GameRecord play_game(const Chromosome& white, const Chromosome& black, const GameConfig& config,
                     const Position& opening, int opening_id, uint64_t seed,
                     const std::string& white_id = "white", const std::string& black_id = "black");

struct ScoreTable {
    std::map<std::string, double> points;
    std::map<std::string, int> games_played;
    std::map<std::string, int> white_games;

    void add(const GameRecord& record);
    double total_points() const;
    int total_games = 0;
};

struct TournamentScheme {
    enum class Kind { RoundRobin, RandomPairing };
    Kind kind = Kind::RandomPairing;
    int min_games = 3;  // RandomPairing only

    static TournamentScheme round_robin() { return {Kind::RoundRobin, 0}; }
    static TournamentScheme random_pairing(int min_games) {
        return {Kind::RandomPairing, min_games};
    }
};

// Schedules deterministically from the rng, then plays the games on up to
// `jobs` workers; the result is identical for any job count.
ScoreTable run_fitness_tournament(std::span<const Chromosome> players,
                                  std::span<const std::string> ids, TournamentScheme scheme,
                                  const GameConfig& config, std::span<const Position> openings,
                                  Rng& rng, int jobs = 1);

// Alternating-color match; openings cycle per game pair so both sides play
// each opening from both colors. PGN is appended to pgn_path as games finish
// (empty path: no PGN). Returns player a's total score.
std::pair<double, std::vector<GameRecord>> run_match(
    const Chromosome& a, const Chromosome& b, int n_games, const GameConfig& config,
    std::span<const Position> openings, const std::string& pgn_path, Rng& rng, int jobs = 1,
    const std::string& name_a = "A", const std::string& name_b = "B",
    const std::string& event = "Phoenix match");

// Ten fixed opening positions after well-known four-ply sequences.
const std::vector<std::string>& builtin_opening_fens();
// selector: "builtin" (the ten) or "startpos" (the single start position).
std::vector<Position> load_openings(const std::string& selector);

}  // namespace phoenix
