#pragma once

#include "phoenix/chess.hpp"
#include "phoenix/genome.hpp"

namespace phoenix {

// Fixed material anchors in centipawns; the chromosome optimizes only the
// positional tables on top of these.
namespace material {
inline constexpr double PAWN = 100.0;
inline constexpr double KNIGHT = 320.0;
inline constexpr double BISHOP = 330.0;
inline constexpr double ROOK = 500.0;
inline constexpr double QUEEN = 900.0;
}  // namespace material

double material_value(PieceKind kind);  // king -> 0

inline constexpr double MATE_SCORE = 100000.0;

// Endgame iff neither side has a queen, or both sides' non-pawn non-king
// material is at most ENDGAME_MATERIAL_LIMIT.
inline constexpr double ENDGAME_MATERIAL_LIMIT = 1300.0;

GamePhase detect_phase(const Position& pos);

// White-positive score: material difference plus per-square table bonuses,
// with Black reading vertically mirrored squares.
double evaluate(const Position& pos, const PvtSet& pvt);

}  // namespace phoenix
