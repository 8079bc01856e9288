#include "phoenix/search.hpp"

#include <algorithm>
#include <cmath>

namespace phoenix {

namespace {

constexpr double INF_SCORE = 2.0 * MATE_SCORE;
constexpr double MATE_BOUND = MATE_SCORE - 256.0;
constexpr int MAX_TOTAL_PLY = 127;

double side_to_move_eval(const Position& pos, const PvtSet& pvt) {
    const double white_score = evaluate(pos, pvt);
    return pos.side_to_move == Color::White ? white_score : -white_score;
}

int attacker_rank(PieceKind k) { return static_cast<int>(k); }

// Mate scores are stored relative to the entry's node, not the root.
double score_to_tt(double s, int ply) {
    if (s >= MATE_BOUND) return s + ply;
    if (s <= -MATE_BOUND) return s - ply;
    return s;
}
double score_from_tt(double s, int ply) {
    if (s >= MATE_BOUND) return s - ply;
    if (s <= -MATE_BOUND) return s + ply;
    return s;
}

}  // namespace

void SearchLimits::validate() const {
    if (!max_depth && !max_nodes && !move_time_ms)
        throw Error("search limits: at least one of depth/nodes/movetime required");
    if (max_depth && *max_depth <= 0) throw Error("search limits: depth must be positive");
    if (max_nodes && *max_nodes == 0) throw Error("search limits: node limit must be positive");
    if (move_time_ms && *move_time_ms <= 0) throw Error("search limits: movetime must be positive");
}

bool is_capture(const Position& pos, const Move& m) {
    if (pos.board[static_cast<size_t>(m.to)] != 0) return true;
    return kind_of(pos.board[static_cast<size_t>(m.from)]) == PieceKind::Pawn &&
           m.to == pos.en_passant;
}

std::vector<Move> order_moves(const Position& pos, std::vector<Move> moves, const PvtSet& pvt) {
    const GamePhase phase = detect_phase(pos);
    const bool white = pos.side_to_move == Color::White;

    struct Keyed {
        int capture_key;  // -1 for quiet moves
        double dest_value;
        Move move;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(moves.size());
    for (const Move& m : moves) {
        const PieceCode mover = pos.board[static_cast<size_t>(m.from)];
        int capture_key = -1;
        if (is_capture(pos, m)) {
            const PieceCode target = pos.board[static_cast<size_t>(m.to)];
            const PieceKind victim = target != 0 ? kind_of(target) : PieceKind::Pawn;  // en passant
            capture_key = static_cast<int>(material_value(victim)) * 100 -
                          attacker_rank(kind_of(mover));
        }
        const Square dest = white ? m.to : mirror_vertical(m.to);
        keyed.push_back({capture_key, pvt.value(kind_of(mover), phase, dest), m});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.capture_key != b.capture_key) return a.capture_key > b.capture_key;
        return a.dest_value > b.dest_value;
    });
    for (size_t i = 0; i < moves.size(); ++i) moves[i] = keyed[i].move;
    return moves;
}

// ------------------------------------------------------------------ Searcher

struct Searcher::TtEntry {
    uint64_t key = 0;
    double score = 0.0;
    Move best;
    int16_t depth = -1;
    uint8_t flag = 0;  // 0 unused, 1 exact, 2 lower, 3 upper
};

struct Searcher::PvLine {
    Move moves[MAX_SEARCH_DEPTH + 1];
    int length = 0;
};

Searcher::Searcher(const PvtSet& pvt, SearchOptions options)
    : pvt_(pvt), options_(options) {
    if (options_.use_tt) {
        size_t n = 1;
        while (n < options_.tt_entries && n < (size_t{1} << 26)) n <<= 1;
        tt_.resize(n);
    }
}

Searcher::~Searcher() = default;

void Searcher::set_pvt(const PvtSet& pvt) {
    pvt_ = pvt;
    new_game();
}

void Searcher::new_game() {
    std::fill(tt_.begin(), tt_.end(), TtEntry{});
}

bool Searcher::should_abort() {
    if (aborted_) return true;
    if (!allow_abort_) return false;
    if ((nodes_ & 1023) == 0) {
        if (stop_ && stop_->load(std::memory_order_relaxed)) aborted_ = true;
        if (node_limit_ && nodes_ >= node_limit_) aborted_ = true;
        if (has_deadline_ && std::chrono::steady_clock::now() >= deadline_) aborted_ = true;
    }
    return aborted_;
}

double Searcher::qsearch(const Position& pos, int ply, double alpha, double beta) {
    ++nodes_;
    if (should_abort()) return 0.0;

    double best = side_to_move_eval(pos, pvt_);
    if (best >= beta || ply >= MAX_TOTAL_PLY) return best;
    alpha = std::max(alpha, best);

    auto moves = generate_legal_moves(pos);
    std::erase_if(moves, [&](const Move& m) {
        if (m.promotion != PieceKind::None && m.promotion != PieceKind::Queen) return true;
        return !is_capture(pos, m) && m.promotion != PieceKind::Queen;
    });
    if (options_.use_ordering) moves = order_moves(pos, std::move(moves), pvt_);

    for (const Move& m : moves) {
        const double value = -qsearch(pos.apply_unchecked(m), ply + 1, -beta, -alpha);
        if (aborted_) return 0.0;
        if (value > best) best = value;
        alpha = std::max(alpha, value);
        if (alpha >= beta) break;
    }
    return best;
}

double Searcher::negamax(const Position& pos, int depth, int ply, double alpha, double beta,
                         PvLine& pv) {
    if (depth <= 0 || ply >= MAX_SEARCH_DEPTH) {
        pv.length = 0;
        return qsearch(pos, ply, alpha, beta);
    }

    ++nodes_;
    if (should_abort()) return 0.0;
    pv.length = 0;

    const uint64_t key = pos.hash;
    Move tt_move{};
    bool have_tt_move = false;
    if (options_.use_tt) {
        const TtEntry& e = tt_[key & (tt_.size() - 1)];
        if (e.flag != 0 && e.key == key) {
            tt_move = e.best;
            have_tt_move = !(e.best == Move{});
            if (ply > 0 && e.depth >= depth) {
                const double score = score_from_tt(e.score, ply);
                if (e.flag == 1) return score;
                if (e.flag == 2 && score >= beta) return score;
                if (e.flag == 3 && score <= alpha) return score;
            }
        }
    }

    auto moves = generate_legal_moves(pos);
    if (moves.empty()) return pos.in_check(pos.side_to_move) ? -(MATE_SCORE - ply) : 0.0;

    if (options_.use_ordering) moves = order_moves(pos, std::move(moves), pvt_);
    if (have_tt_move) {
        const auto it = std::find(moves.begin(), moves.end(), tt_move);
        if (it != moves.end()) std::rotate(moves.begin(), it, it + 1);
    }

    const double alpha_in = alpha;
    double best = -INF_SCORE;
    Move best_move{};
    PvLine child_pv;
    for (const Move& m : moves) {
        const double value = -negamax(pos.apply_unchecked(m), depth - 1, ply + 1, -beta, -alpha,
                                      child_pv);
        if (aborted_) return 0.0;
        if (value > best) {
            best = value;
            best_move = m;
            pv.moves[0] = m;
            pv.length = std::min(child_pv.length + 1, MAX_SEARCH_DEPTH);
            std::copy(child_pv.moves, child_pv.moves + pv.length - 1, pv.moves + 1);
        }
        alpha = std::max(alpha, value);
        if (alpha >= beta) break;
    }

    if (options_.use_tt) {
        TtEntry& e = tt_[key & (tt_.size() - 1)];  // replace always
        e.key = key;
        e.score = score_to_tt(best, ply);
        e.best = best_move;
        e.depth = static_cast<int16_t>(depth);
        e.flag = best >= beta ? 2 : (best <= alpha_in ? 3 : 1);
    }
    return best;
}

SearchResult Searcher::search(const Position& root, const SearchLimits& limits,
                              const std::atomic<bool>* stop,
                              const IterationCallback& on_iteration) {
    limits.validate();
    if (generate_legal_moves(root).empty())
        throw Error("search: no legal moves at root; check game_status first");

    stop_ = stop;
    nodes_ = 0;
    aborted_ = false;
    node_limit_ = limits.max_nodes.value_or(0);
    has_deadline_ = limits.move_time_ms.has_value();
    const auto start = std::chrono::steady_clock::now();
    if (has_deadline_) deadline_ = start + std::chrono::milliseconds(*limits.move_time_ms);

    const int depth_cap = std::min(limits.max_depth.value_or(MAX_SEARCH_DEPTH), MAX_SEARCH_DEPTH);
    SearchResult result;
    for (int depth = 1; depth <= depth_cap; ++depth) {
        allow_abort_ = depth > 1;  // the first iteration always completes
        PvLine pv;
        const double value = negamax(root, depth, 0, -INF_SCORE, INF_SCORE, pv);
        if (aborted_) break;

        result.best_move = pv.moves[0];
        result.score = value;
        result.depth_reached = depth;
        result.nodes = nodes_;
        result.pv.assign(pv.moves, pv.moves + pv.length);
        if (on_iteration) on_iteration(result);

        if (stop_ && stop_->load(std::memory_order_relaxed)) break;
        if (node_limit_ && nodes_ >= node_limit_) break;
        if (has_deadline_ && std::chrono::steady_clock::now() >= deadline_) break;
    }
    result.nodes = nodes_;
    return result;
}

SearchResult search_best_move(const Position& pos, const SearchLimits& limits, const PvtSet& pvt,
                              const std::atomic<bool>* stop, const SearchOptions& options) {
    Searcher searcher(pvt, options);
    return searcher.search(pos, limits, stop);
}

}  // namespace phoenix
