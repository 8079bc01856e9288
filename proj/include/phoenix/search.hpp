#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "phoenix/chess.hpp"
#include "phoenix/eval.hpp"
#include "phoenix/genome.hpp"

namespace phoenix {

inline constexpr int MAX_SEARCH_DEPTH = 64;

struct SearchLimits {
    std::optional<int> max_depth;        // plies
    std::optional<uint64_t> max_nodes;   // searched nodes
    std::optional<int64_t> move_time_ms;

    static SearchLimits depth(int d) { return {d, std::nullopt, std::nullopt}; }
    static SearchLimits nodes(uint64_t n) { return {std::nullopt, n, std::nullopt}; }
    static SearchLimits move_time(int64_t ms) { return {std::nullopt, std::nullopt, ms}; }
    static SearchLimits infinite() { return depth(MAX_SEARCH_DEPTH); }

    void validate() const;  // at least one limit, all positive
};

struct SearchResult {
    Move best_move;
    double score = 0.0;  // side-to-move perspective, centipawns
    int depth_reached = 0;
    uint64_t nodes = 0;
    std::vector<Move> pv;
};

struct SearchOptions {
    bool use_tt = true;        // off for oracle-equivalence testing
    bool use_ordering = true;  // off for ordering-effectiveness measurements
    size_t tt_entries = 1 << 18;
};

// Captures first (MVV-LVA among them), then by the mover's table value on the
// destination square, descending; stable, so equal keys keep generation order.
std::vector<Move> order_moves(const Position& pos, std::vector<Move> moves, const PvtSet& pvt);

// Iterative-deepening negamax alpha-beta with a capture/queen-promotion
// quiescence at the horizon. One instance is single-threaded; the stop flag
// may be set from anywhere.
class Searcher {
public:
    explicit Searcher(const PvtSet& pvt, SearchOptions options = {});
    ~Searcher();
    Searcher(const Searcher&) = delete;
    Searcher& operator=(const Searcher&) = delete;

    void set_pvt(const PvtSet& pvt);
    void new_game();  // drops transposition table contents

    using IterationCallback = std::function<void(const SearchResult&)>;

    // Throws Error if the root has no legal move.
    SearchResult search(const Position& root, const SearchLimits& limits,
                        const std::atomic<bool>* stop = nullptr,
                        const IterationCallback& on_iteration = nullptr);

private:
    struct TtEntry;
    struct PvLine;

    double negamax(const Position& pos, int depth, int ply, double alpha, double beta,
                   PvLine& pv);
    double qsearch(const Position& pos, int ply, double alpha, double beta);
    bool should_abort();

    PvtSet pvt_;
    SearchOptions options_;
    std::vector<TtEntry> tt_;

    const std::atomic<bool>* stop_ = nullptr;
    uint64_t nodes_ = 0;
    uint64_t node_limit_ = 0;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
    bool allow_abort_ = false;
    bool aborted_ = false;
};

SearchResult search_best_move(const Position& pos, const SearchLimits& limits, const PvtSet& pvt,
                              const std::atomic<bool>* stop = nullptr,
                              const SearchOptions& options = {});

// True for captures (including en passant).
bool is_capture(const Position& pos, const Move& m);

}  // namespace phoenix
