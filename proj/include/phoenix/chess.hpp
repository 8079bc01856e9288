#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phoenix {

// Thrown on malformed FEN, illegal moves, bad store files and the like.
// The message always names the violated rule.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Color : int8_t { White = 0, Black = 1 };

constexpr Color opposite(Color c) {
    return c == Color::White ? Color::Black : Color::White;
}

enum class PieceKind : int8_t { None = 0, Pawn, Knight, Bishop, Rook, Queen, King };

// Board cell: 0 empty, +kind for White, -kind for Black.
using PieceCode = int8_t;

constexpr PieceCode make_piece(Color c, PieceKind k) {
    return c == Color::White ? static_cast<PieceCode>(k) : static_cast<PieceCode>(-static_cast<int8_t>(k));
}
constexpr PieceKind kind_of(PieceCode p) {
    return static_cast<PieceKind>(p < 0 ? -p : p);
}
constexpr Color color_of(PieceCode p) {  // pre: p != 0
    return p > 0 ? Color::White : Color::Black;
}

// Squares are 0..63 with a1=0, b1=1, ..., h8=63 (rank*8 + file).
using Square = int;

constexpr int file_of(Square s) { return s & 7; }
constexpr int rank_of(Square s) { return s >> 3; }
constexpr Square make_square(int file, int rank) { return rank * 8 + file; }
constexpr Square mirror_vertical(Square s) { return s ^ 56; }

std::string square_name(Square s);
std::optional<Square> parse_square(std::string_view text);

struct Move {
    int8_t from = 0;
    int8_t to = 0;
    PieceKind promotion = PieceKind::None;

    static Move of(Square from, Square to, PieceKind promotion = PieceKind::None) {
        return {static_cast<int8_t>(from), static_cast<int8_t>(to), promotion};
    }

    bool operator==(const Move&) const = default;
};

// Long algebraic form used by UCI: "e2e4", "e7e8q".
std::string to_uci(const Move& m);
std::optional<Move> move_from_uci(std::string_view text);  // syntax only, no legality

// Castling right bits.
enum : uint8_t {
    CASTLE_WK = 1,
    CASTLE_WQ = 2,
    CASTLE_BK = 4,
    CASTLE_BQ = 8,
};

struct Position {
    std::array<PieceCode, 64> board{};
    Color side_to_move = Color::White;
    uint8_t castling = 0;
    int8_t en_passant = -1;  // target square, or -1
    int halfmove_clock = 0;
    int fullmove_number = 1;
    uint64_t hash = 0;  // Zobrist over pieces/side/castling/en-passant (not counters)

    bool operator==(const Position&) const = default;

    static Position startpos();
    static Position from_fen(const std::string& fen);  // throws Error
    std::string fen() const;

    PieceCode at(Square s) const { return board[static_cast<size_t>(s)]; }
    Square king_square(Color c) const;
    bool is_attacked(Square s, Color by) const;
    bool in_check(Color c) const { return is_attacked(king_square(c), opposite(c)); }

    // Applies a move known to come from generate_legal_moves. No validation.
    Position apply_unchecked(const Move& m) const;
    // Validates membership in generate_legal_moves first; throws Error if illegal.
    Position apply(const Move& m) const;
};

// Exactly the legal moves, sorted by (from, to, promotion).
std::vector<Move> generate_legal_moves(const Position& pos);

uint64_t perft(const Position& pos, int depth);

// Recomputes the Zobrist key from scratch (apply_unchecked maintains it
// incrementally; this is the cross-check).
uint64_t compute_hash(const Position& pos);

// Vertical mirror with colors swapped: used for evaluation/search symmetry
// checks. A legal position maps to a legal position.
Position color_flip(const Position& pos);

enum class StatusKind : int8_t {
    Ongoing,
    Checkmate,
    Stalemate,
    DrawFiftyMove,
    DrawThreefold,
    DrawInsufficientMaterial,
    DrawAdjudicated,
};

struct GameStatus {
    StatusKind kind = StatusKind::Ongoing;
    std::optional<Color> winner;  // set iff kind == Checkmate

    bool ongoing() const { return kind == StatusKind::Ongoing; }
    bool is_draw() const { return kind != StatusKind::Ongoing && kind != StatusKind::Checkmate; }
    bool operator==(const GameStatus&) const = default;
};

std::string to_string(StatusKind k);

// prior_hashes holds the Zobrist keys of every earlier position of the game
// (not including pos itself). Threefold fires when pos occurs for the third
// time overall.
GameStatus game_status(const Position& pos, std::span<const uint64_t> prior_hashes);

inline constexpr const char* START_FEN =
    "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

}  // namespace phoenix
