#include "phoenix/eval.hpp"

namespace phoenix {

double material_value(PieceKind kind) {
    switch (kind) {
        case PieceKind::Pawn: return material::PAWN;
        case PieceKind::Knight: return material::KNIGHT;
        case PieceKind::Bishop: return material::BISHOP;
        case PieceKind::Rook: return material::ROOK;
        case PieceKind::Queen: return material::QUEEN;
        default: return 0.0;
    }
}

GamePhase detect_phase(const Position& pos) {
    double non_pawn[2] = {0.0, 0.0};
    bool queen[2] = {false, false};
    for (Square s = 0; s < 64; ++s) {
        const PieceCode p = pos.board[static_cast<size_t>(s)];
        if (p == 0) continue;
        const PieceKind kind = kind_of(p);
        if (kind == PieceKind::Pawn || kind == PieceKind::King) continue;
        const int side = p > 0 ? 0 : 1;
        non_pawn[side] += material_value(kind);
        if (kind == PieceKind::Queen) queen[side] = true;
    }
    if (!queen[0] && !queen[1]) return GamePhase::EndGame;
    if (non_pawn[0] <= ENDGAME_MATERIAL_LIMIT && non_pawn[1] <= ENDGAME_MATERIAL_LIMIT)
        return GamePhase::EndGame;
    return GamePhase::MiddleGame;
}

double evaluate(const Position& pos, const PvtSet& pvt) {
    const GamePhase phase = detect_phase(pos);
    double white = 0.0;
    double black = 0.0;
    // Both colors are accumulated in the same loop over White-perspective
    // squares, so a color-flipped position produces bit-identical sums with
    // the roles swapped: evaluate(flip(P)) == -evaluate(P) exactly.
    for (Square s = 0; s < 64; ++s) {
        const PieceCode pw = pos.board[static_cast<size_t>(s)];
        if (pw > 0) white += material_value(kind_of(pw)) + pvt.value(kind_of(pw), phase, s);
        const PieceCode pb = pos.board[static_cast<size_t>(mirror_vertical(s))];
        if (pb < 0) black += material_value(kind_of(pb)) + pvt.value(kind_of(pb), phase, s);
    }
    return white - black;
}

}  // namespace phoenix
