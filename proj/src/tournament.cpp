#include "phoenix/tournament.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "phoenix/pgn.hpp"

namespace phoenix {

std::string result_string(GameOutcome r) {
    switch (r) {
        case GameOutcome::WhiteWin: return "1-0";
        case GameOutcome::BlackWin: return "0-1";
        case GameOutcome::Draw: return "1/2-1/2";
    }
    return "*";
}

GameRecord play_game(const Chromosome& white, const Chromosome& black, const GameConfig& config,
                     const Position& opening, int opening_id, uint64_t seed,
                     const std::string& white_id, const std::string& black_id) {
    GameRecord record;
    record.white_id = white_id;
    record.black_id = black_id;
    record.opening_id = opening_id;
    record.seed = seed;

    Searcher white_searcher(unflatten(white.genes), config.search);
    Searcher black_searcher(unflatten(black.genes), config.search);

    Position pos = opening;
    std::vector<uint64_t> history;
    GameStatus status = game_status(pos, history);
    while (status.ongoing()) {
        if (static_cast<int>(record.moves.size()) >= config.max_plies) {
            status = {StatusKind::DrawAdjudicated, std::nullopt};
            break;
        }
        Searcher& searcher =
            pos.side_to_move == Color::White ? white_searcher : black_searcher;
        SearchResult best;
        try {
            best = searcher.search(pos, config.limits);
        } catch (const std::exception& e) {
            throw Error("game " + white_id + " vs " + black_id + ", ply " +
                        std::to_string(record.moves.size()) + ": " + e.what());
        }
        history.push_back(pos.hash);
        pos = pos.apply(best.best_move);
        record.moves.push_back(best.best_move);
        status = game_status(pos, history);
    }

    record.termination = status;
    if (status.kind == StatusKind::Checkmate)
        record.result =
            *status.winner == Color::White ? GameOutcome::WhiteWin : GameOutcome::BlackWin;
    else
        record.result = GameOutcome::Draw;
    return record;
}

void ScoreTable::add(const GameRecord& record) {
    const double white_points = record.result == GameOutcome::WhiteWin
                                    ? 1.0
                                    : (record.result == GameOutcome::Draw ? 0.5 : 0.0);
    points[record.white_id] += white_points;
    points[record.black_id] += 1.0 - white_points;
    games_played[record.white_id] += 1;
    games_played[record.black_id] += 1;
    white_games[record.white_id] += 1;
    total_games += 1;
}

double ScoreTable::total_points() const {
    double sum = 0.0;
    for (const auto& [id, pts] : points) sum += pts;
    return sum;
}

namespace {

struct PlannedGame {
    size_t white;
    size_t black;
    int opening_id;
    uint64_t seed;
};

void run_parallel(size_t count, int jobs, const std::function<void(size_t)>& work) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const size_t n_threads = std::min<size_t>(static_cast<size_t>(jobs), count);
    pool.reserve(n_threads);
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<GameRecord> play_planned(std::span<const Chromosome> players,
                                     std::span<const std::string> ids,
                                     std::span<const PlannedGame> plan, const GameConfig& config,
                                     std::span<const Position> openings, int jobs) {
    std::vector<GameRecord> records(plan.size());
    run_parallel(plan.size(), jobs, [&](size_t i) {
        const PlannedGame& g = plan[i];
        records[i] = play_game(players[g.white], players[g.black], config,
                               openings[static_cast<size_t>(g.opening_id)], g.opening_id, g.seed,
                               ids[g.white], ids[g.black]);
    });
    return records;
}

std::vector<PlannedGame> plan_round_robin(size_t n_players, size_t n_openings, Rng& rng) {
    std::vector<PlannedGame> plan;
    size_t pair_count = 0;
    for (size_t i = 0; i < n_players; ++i) {
        for (size_t j = i + 1; j < n_players; ++j) {
            const int opening = static_cast<int>(pair_count % n_openings);
            plan.push_back({i, j, opening, rng.next_u64()});
            plan.push_back({j, i, opening, rng.next_u64()});
            ++pair_count;
        }
    }
    return plan;
}

std::vector<PlannedGame> plan_random_pairing(size_t n_players, int min_games, size_t n_openings,
                                             Rng& rng) {
    std::vector<int> games(n_players, 0);
    std::vector<int> balance(n_players, 0);  // white minus black games
    std::vector<PlannedGame> plan;
    std::vector<size_t> pool;
    for (;;) {
        size_t subject = n_players;
        for (size_t i = 0; i < n_players; ++i)
            if (games[i] < min_games && (subject == n_players || games[i] < games[subject]))
                subject = i;
        if (subject == n_players) break;

        bool subject_white;
        if (balance[subject] < 0) subject_white = true;
        else if (balance[subject] > 0) subject_white = false;
        else subject_white = rng.chance(0.5);

        // The opponent takes the other color; keep everyone within +-1.
        pool.clear();
        for (size_t j = 0; j < n_players; ++j) {
            if (j == subject) continue;
            if (subject_white ? balance[j] >= 0 : balance[j] <= 0) pool.push_back(j);
        }
        if (pool.empty()) throw Error("tournament: color balancing found no opponent");
        const size_t opponent = pool[rng.index(pool.size())];

        const size_t white = subject_white ? subject : opponent;
        const size_t black = subject_white ? opponent : subject;
        plan.push_back({white, black,
                        static_cast<int>(plan.size() % n_openings), rng.next_u64()});
        games[white] += 1;
        games[black] += 1;
        balance[white] += 1;
        balance[black] -= 1;
    }
    return plan;
}

}  // namespace

ScoreTable run_fitness_tournament(std::span<const Chromosome> players,
                                  std::span<const std::string> ids, TournamentScheme scheme,
                                  const GameConfig& config, std::span<const Position> openings,
                                  Rng& rng, int jobs) {
    if (players.size() < 2) throw Error("tournament: need at least 2 players");
    if (players.size() != ids.size()) throw Error("tournament: one id per player required");
    if (openings.empty()) throw Error("tournament: opening set is empty");

    std::vector<PlannedGame> plan;
    if (scheme.kind == TournamentScheme::Kind::RoundRobin) {
        plan = plan_round_robin(players.size(), openings.size(), rng);
    } else {
        if (scheme.min_games < 1) throw Error("tournament: min_games must be >= 1");
        plan = plan_random_pairing(players.size(), scheme.min_games, openings.size(), rng);
    }

    ScoreTable table;
    for (size_t i = 0; i < ids.size(); ++i) {
        table.points[ids[i]] = 0.0;
        table.games_played[ids[i]] = 0;
        table.white_games[ids[i]] = 0;
    }
    for (const GameRecord& record : play_planned(players, ids, plan, config, openings, jobs))
        table.add(record);
    return table;
}

std::pair<double, std::vector<GameRecord>> run_match(
    const Chromosome& a, const Chromosome& b, int n_games, const GameConfig& config,
    std::span<const Position> openings, const std::string& pgn_path, Rng& rng, int jobs,
    const std::string& name_a, const std::string& name_b, const std::string& event) {
    if (n_games < 1) throw Error("match: games must be >= 1");
    if (openings.empty()) throw Error("match: opening set is empty");

    const std::array<Chromosome, 2> players{a, b};
    const std::array<std::string, 2> ids{name_a, name_b};
    std::vector<PlannedGame> plan;
    plan.reserve(static_cast<size_t>(n_games));
    for (int k = 0; k < n_games; ++k) {
        const size_t white = static_cast<size_t>(k % 2);          // colors alternate strictly
        const int opening = (k / 2) % static_cast<int>(openings.size());
        plan.push_back({white, 1 - white, opening, rng.next_u64()});
    }

    std::ofstream pgn;
    if (!pgn_path.empty()) {
        pgn.open(pgn_path, std::ios::app);
        if (!pgn) throw Error("match: cannot open pgn file '" + pgn_path + "'");
    }

    std::vector<GameRecord> records(plan.size());
    std::vector<std::unique_ptr<std::atomic<bool>>> done;
    for (int k = 0; k < n_games; ++k) done.push_back(std::make_unique<std::atomic<bool>>(false));
    size_t written = 0;
    std::mutex write_mutex;
    const auto flush_finished = [&] {
        std::lock_guard lock(write_mutex);
        while (written < records.size() && done[written]->load()) {
            const GameRecord& r = records[written];
            if (pgn.is_open()) {
                PgnHeader header;
                header.event = event;
                header.site = "local";
                header.round = std::to_string(written + 1);
                header.white = r.white_id;
                header.black = r.black_id;
                write_pgn_game(pgn, header, openings[static_cast<size_t>(r.opening_id)], r.moves,
                               result_string(r.result));
                pgn.flush();
            }
            ++written;
        }
    };

    run_parallel(plan.size(), jobs, [&](size_t i) {
        const PlannedGame& g = plan[i];
        records[i] = play_game(players[g.white], players[g.black], config,
                               openings[static_cast<size_t>(g.opening_id)], g.opening_id, g.seed,
                               ids[g.white], ids[g.black]);
        done[i]->store(true);
        flush_finished();
    });
    flush_finished();

    double score_a = 0.0;
    for (const GameRecord& r : records) {
        const bool a_white = r.white_id == name_a;
        if (r.result == GameOutcome::Draw) score_a += 0.5;
        else if ((r.result == GameOutcome::WhiteWin) == a_white) score_a += 1.0;
    }
    return {score_a, std::move(records)};
}

const std::vector<std::string>& builtin_opening_fens() {
    // Positions after ten well-known four-ply openings.
    static const std::vector<std::string> fens = {
        // 1. e4 e5 2. Nf3 Nc6
        "r1bqkbnr/pppp1ppp/2n5/4p3/4P3/5N2/PPPP1PPP/RNBQKB1R w KQkq - 2 3",
        // 1. e4 c5 2. Nf3 d6 (Sicilian)
        "rnbqkbnr/pp2pppp/3p4/2p5/4P3/5N2/PPPP1PPP/RNBQKB1R w KQkq - 0 3",
        // 1. e4 e6 2. d4 d5 (French)
        "rnbqkbnr/ppp2ppp/4p3/3p4/3PP3/8/PPP2PPP/RNBQKBNR w KQkq d6 0 3",
        // 1. e4 c6 2. d4 d5 (Caro-Kann)
        "rnbqkbnr/pp2pppp/2p5/3p4/3PP3/8/PPP2PPP/RNBQKBNR w KQkq d6 0 3",
        // 1. d4 d5 2. c4 e6 (Queen's Gambit Declined)
        "rnbqkbnr/ppp2ppp/4p3/3p4/2PP4/8/PP2PPPP/RNBQKBNR w KQkq - 0 3",
        // 1. d4 d5 2. c4 c6 (Slav)
        "rnbqkbnr/pp2pppp/2p5/3p4/2PP4/8/PP2PPPP/RNBQKBNR w KQkq - 0 3",
        // 1. d4 Nf6 2. c4 g6 (King's Indian)
        "rnbqkb1r/pppppp1p/5np1/8/2PP4/8/PP2PPPP/RNBQKBNR w KQkq - 0 3",
        // 1. d4 Nf6 2. c4 e6 (Indian defence)
        "rnbqkb1r/pppp1ppp/4pn2/8/2PP4/8/PP2PPPP/RNBQKBNR w KQkq - 0 3",
        // 1. c4 e5 2. Nc3 Nf6 (English)
        "rnbqkb1r/pppp1ppp/5n2/4p3/2P5/2N5/PP1PPPPP/R1BQKBNR w KQkq - 2 3",
        // 1. e4 d6 2. d4 Nf6 (Pirc)
        "rnbqkb1r/ppp1pppp/3p1n2/8/3PP3/8/PPP2PPP/RNBQKBNR w KQkq - 1 3",
    };
    return fens;
}

std::vector<Position> load_openings(const std::string& selector) {
    std::vector<Position> openings;
    if (selector == "startpos") {
        openings.push_back(Position::startpos());
    } else if (selector == "builtin") {
        for (const auto& fen : builtin_opening_fens()) openings.push_back(Position::from_fen(fen));
    } else {
        throw Error("unknown opening set '" + selector + "'; available: builtin, startpos");
    }
    return openings;
}

}  // namespace phoenix
