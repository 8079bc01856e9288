#pragma once

// Test-only oracle: a plain exhaustive tree walk with no windows and no
// pruning, independent of the alpha-beta implementation it checks. Capture
// trees transpose heavily, so quiescence values are memoized by position key
// (they are ply independent: capture chains end long before the depth cap).
// A node budget guards against positions whose exhaustive tree is infeasible.

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

#include "phoenix/eval.hpp"
#include "phoenix/search.hpp"

namespace phoenix::testoracle {

inline double eval_for_mover(const Position& pos, const PvtSet& pvt) {
    const double white_score = evaluate(pos, pvt);
    return pos.side_to_move == Color::White ? white_score : -white_score;
}

inline bool is_quiescence_move(const Position& pos, const Move& m) {
    if (m.promotion != PieceKind::None && m.promotion != PieceKind::Queen) return false;
    if (m.promotion == PieceKind::Queen) return true;
    if (pos.at(m.to) != 0) return true;
    return kind_of(pos.at(m.from)) == PieceKind::Pawn && m.to == pos.en_passant;
}

class UnprunedOracle {
public:
    explicit UnprunedOracle(const PvtSet& pvt,
                            uint64_t node_budget = std::numeric_limits<uint64_t>::max())
        : pvt_(pvt), budget_(node_budget) {}

    // Root minimax value; nullopt when the budget ran out.
    std::optional<double> value(const Position& pos, int depth) {
        reset();
        const double v = minimax(pos, depth, 0);
        if (over_budget_) return std::nullopt;
        return v;
    }

    // First strictly-best move in the engine's ordered root list, so
    // tie-breaking matches the implementation under test.
    std::optional<Move> best_move(const Position& pos, int depth) {
        reset();
        const auto moves = order_moves(pos, generate_legal_moves(pos), pvt_);
        Move best_move = moves.front();
        double best = -std::numeric_limits<double>::infinity();
        for (const Move& m : moves) {
            const double v = -minimax(pos.apply_unchecked(m), depth - 1, 1);
            if (over_budget_) return std::nullopt;
            if (v > best) {
                best = v;
                best_move = m;
            }
        }
        return best_move;
    }

    std::optional<double> quiescence_value(const Position& pos) {
        reset();
        const double v = quiescence(pos, 0);
        if (over_budget_) return std::nullopt;
        return v;
    }

private:
    void reset() {
        nodes_ = 0;
        over_budget_ = false;
        memo_.clear();
    }

    bool tick() {
        if (++nodes_ > budget_) over_budget_ = true;
        return over_budget_;
    }

    double quiescence(const Position& pos, int ply) {
        if (tick()) return 0.0;
        const auto it = memo_.find(pos.hash);
        if (it != memo_.end()) return it->second;
        double best = eval_for_mover(pos, pvt_);
        if (ply >= 127) return best;
        for (const Move& m : generate_legal_moves(pos)) {
            if (!is_quiescence_move(pos, m)) continue;
            best = std::max(best, -quiescence(pos.apply_unchecked(m), ply + 1));
            if (over_budget_) return 0.0;
        }
        memo_.emplace(pos.hash, best);
        return best;
    }

    double minimax(const Position& pos, int depth, int ply) {
        if (depth <= 0) return quiescence(pos, ply);
        if (tick()) return 0.0;
        const auto moves = generate_legal_moves(pos);
        if (moves.empty()) return pos.in_check(pos.side_to_move) ? -(MATE_SCORE - ply) : 0.0;
        double best = -std::numeric_limits<double>::infinity();
        for (const Move& m : moves) {
            best = std::max(best, -minimax(pos.apply_unchecked(m), depth - 1, ply + 1));
            if (over_budget_) return 0.0;
        }
        return best;
    }

    PvtSet pvt_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    bool over_budget_ = false;
    std::unordered_map<uint64_t, double> memo_;
};

}  // namespace phoenix::testoracle
