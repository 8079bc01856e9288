#include "phoenix/chess.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace phoenix {

namespace {

// ---------------------------------------------------------------- zobrist

struct ZobristKeys {
    uint64_t psq[12][64];
    uint64_t castling[16];
    uint64_t ep_file[8];
    uint64_t black_to_move;
};

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const ZobristKeys& zobrist() {
    static const ZobristKeys keys = [] {
        ZobristKeys k{};
        uint64_t state = 0x5bd1e995c6a3f94dULL;  // fixed seed, reproducible keys
        for (auto& table : k.psq)
            for (auto& v : table) v = splitmix64(state);
        for (auto& v : k.castling) v = splitmix64(state);
        for (auto& v : k.ep_file) v = splitmix64(state);
        k.black_to_move = splitmix64(state);
        return k;
    }();
    return keys;
}

int piece_index(PieceCode p) {
    const int c = p > 0 ? 0 : 6;
    const int k = static_cast<int>(kind_of(p)) - 1;
    return c + k;
}

// ---------------------------------------------------------------- geometry

struct Delta {
    int df;
    int dr;
};

constexpr Delta KNIGHT_DELTAS[8] = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                    {1, -2},  {1, 2},  {2, -1},  {2, 1}};
constexpr Delta KING_DELTAS[8] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                  {0, 1},   {1, -1}, {1, 0},  {1, 1}};
constexpr Delta ROOK_DIRS[4] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
constexpr Delta BISHOP_DIRS[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

bool on_board(int file, int rank) {
    return file >= 0 && file < 8 && rank >= 0 && rank < 8;
}

char piece_char(PieceCode p) {
    static constexpr const char* WHITE = " PNBRQK";
    static constexpr const char* BLACK = " pnbrqk";
    return p > 0 ? WHITE[p] : BLACK[-p];
}

PieceCode piece_from_char(char c) {
    switch (c) {
        case 'P': return make_piece(Color::White, PieceKind::Pawn);
        case 'N': return make_piece(Color::White, PieceKind::Knight);
        case 'B': return make_piece(Color::White, PieceKind::Bishop);
        case 'R': return make_piece(Color::White, PieceKind::Rook);
        case 'Q': return make_piece(Color::White, PieceKind::Queen);
        case 'K': return make_piece(Color::White, PieceKind::King);
        case 'p': return make_piece(Color::Black, PieceKind::Pawn);
        case 'n': return make_piece(Color::Black, PieceKind::Knight);
        case 'b': return make_piece(Color::Black, PieceKind::Bishop);
        case 'r': return make_piece(Color::Black, PieceKind::Rook);
        case 'q': return make_piece(Color::Black, PieceKind::Queen);
        case 'k': return make_piece(Color::Black, PieceKind::King);
        default: return 0;
    }
}

}  // namespace

// ---------------------------------------------------------------- squares

std::string square_name(Square s) {
    std::string out(2, '?');
    out[0] = static_cast<char>('a' + file_of(s));
    out[1] = static_cast<char>('1' + rank_of(s));
    return out;
}

std::optional<Square> parse_square(std::string_view text) {
    if (text.size() != 2) return std::nullopt;
    const int file = text[0] - 'a';
    const int rank = text[1] - '1';
    if (!on_board(file, rank)) return std::nullopt;
    return make_square(file, rank);
}

std::string to_uci(const Move& m) {
    std::string out = square_name(m.from) + square_name(m.to);
    switch (m.promotion) {
        case PieceKind::Knight: out += 'n'; break;
        case PieceKind::Bishop: out += 'b'; break;
        case PieceKind::Rook: out += 'r'; break;
        case PieceKind::Queen: out += 'q'; break;
        default: break;
    }
    return out;
}

std::optional<Move> move_from_uci(std::string_view text) {
    if (text.size() != 4 && text.size() != 5) return std::nullopt;
    const auto from = parse_square(text.substr(0, 2));
    const auto to = parse_square(text.substr(2, 2));
    if (!from || !to) return std::nullopt;
    Move m;
    m.from = static_cast<int8_t>(*from);
    m.to = static_cast<int8_t>(*to);
    if (text.size() == 5) {
        switch (text[4]) {
            case 'n': m.promotion = PieceKind::Knight; break;
            case 'b': m.promotion = PieceKind::Bishop; break;
            case 'r': m.promotion = PieceKind::Rook; break;
            case 'q': m.promotion = PieceKind::Queen; break;
            default: return std::nullopt;
        }
    }
    return m;
}

// ---------------------------------------------------------------- position

Square Position::king_square(Color c) const {
    const PieceCode king = make_piece(c, PieceKind::King);
    for (Square s = 0; s < 64; ++s)
        if (board[static_cast<size_t>(s)] == king) return s;
    throw Error("position has no " + std::string(c == Color::White ? "white" : "black") + " king");
}

bool Position::is_attacked(Square s, Color by) const {
    const int f = file_of(s);
    const int r = rank_of(s);

    const PieceCode pawn = make_piece(by, PieceKind::Pawn);
    const int pr = by == Color::White ? r - 1 : r + 1;  // rank a pawn attacks from
    if (pr >= 0 && pr < 8) {
        if (f > 0 && board[static_cast<size_t>(make_square(f - 1, pr))] == pawn) return true;
        if (f < 7 && board[static_cast<size_t>(make_square(f + 1, pr))] == pawn) return true;
    }

    const PieceCode knight = make_piece(by, PieceKind::Knight);
    for (const auto& d : KNIGHT_DELTAS) {
        const int nf = f + d.df, nr = r + d.dr;
        if (on_board(nf, nr) && board[static_cast<size_t>(make_square(nf, nr))] == knight) return true;
    }

    const PieceCode king = make_piece(by, PieceKind::King);
    for (const auto& d : KING_DELTAS) {
        const int nf = f + d.df, nr = r + d.dr;
        if (on_board(nf, nr) && board[static_cast<size_t>(make_square(nf, nr))] == king) return true;
    }

    const PieceCode rook = make_piece(by, PieceKind::Rook);
    const PieceCode queen = make_piece(by, PieceKind::Queen);
    for (const auto& d : ROOK_DIRS) {
        int nf = f + d.df, nr = r + d.dr;
        while (on_board(nf, nr)) {
            const PieceCode p = board[static_cast<size_t>(make_square(nf, nr))];
            if (p != 0) {
                if (p == rook || p == queen) return true;
                break;
            }
            nf += d.df;
            nr += d.dr;
        }
    }

    const PieceCode bishop = make_piece(by, PieceKind::Bishop);
    for (const auto& d : BISHOP_DIRS) {
        int nf = f + d.df, nr = r + d.dr;
        while (on_board(nf, nr)) {
            const PieceCode p = board[static_cast<size_t>(make_square(nf, nr))];
            if (p != 0) {
                if (p == bishop || p == queen) return true;
                break;
            }
            nf += d.df;
            nr += d.dr;
        }
    }

    return false;
}

uint64_t compute_hash(const Position& pos) {
    const auto& z = zobrist();
    uint64_t h = 0;
    for (Square s = 0; s < 64; ++s) {
        const PieceCode p = pos.board[static_cast<size_t>(s)];
        if (p != 0) h ^= z.psq[piece_index(p)][s];
    }
    h ^= z.castling[pos.castling];
    if (pos.en_passant >= 0) h ^= z.ep_file[file_of(pos.en_passant)];
    if (pos.side_to_move == Color::Black) h ^= z.black_to_move;
    return h;
}

// ---------------------------------------------------------------- FEN

Position Position::startpos() {
    static const Position start = from_fen(START_FEN);
    return start;
}

Position Position::from_fen(const std::string& fen) {
    std::istringstream in(fen);
    std::string placement, side, castle, ep, halfmove, fullmove;
    if (!(in >> placement >> side >> castle >> ep >> halfmove >> fullmove))
        throw Error("fen: expected 6 fields");

    Position pos;
    int rank = 7, file = 0;
    for (const char c : placement) {
        if (c == '/') {
            if (file != 8) throw Error("fen: rank does not span 8 files");
            if (--rank < 0) throw Error("fen: too many ranks");
            file = 0;
        } else if (c >= '1' && c <= '8') {
            file += c - '0';
            if (file > 8) throw Error("fen: rank does not span 8 files");
        } else {
            const PieceCode p = piece_from_char(c);
            if (p == 0) throw Error(std::string("fen: invalid piece character '") + c + "'");
            if (file > 7) throw Error("fen: rank does not span 8 files");
            pos.board[static_cast<size_t>(make_square(file, rank))] = p;
            ++file;
        }
    }
    if (rank != 0 || file != 8) throw Error("fen: expected 8 ranks of 8 files");

    if (side == "w") pos.side_to_move = Color::White;
    else if (side == "b") pos.side_to_move = Color::Black;
    else throw Error("fen: side to move must be 'w' or 'b'");

    if (castle != "-") {
        for (const char c : castle) {
            uint8_t bit = 0;
            switch (c) {
                case 'K': bit = CASTLE_WK; break;
                case 'Q': bit = CASTLE_WQ; break;
                case 'k': bit = CASTLE_BK; break;
                case 'q': bit = CASTLE_BQ; break;
                default: throw Error("fen: invalid castling field");
            }
            if (pos.castling & bit) throw Error("fen: duplicate castling right");
            pos.castling |= bit;
        }
    }
    // Drop rights whose king/rook are not on their home squares.
    const auto rook_at = [&](Square s, Color c) {
        return pos.board[static_cast<size_t>(s)] == make_piece(c, PieceKind::Rook);
    };
    const auto king_at = [&](Square s, Color c) {
        return pos.board[static_cast<size_t>(s)] == make_piece(c, PieceKind::King);
    };
    if (!king_at(4, Color::White)) pos.castling &= ~(CASTLE_WK | CASTLE_WQ);
    if (!king_at(60, Color::Black)) pos.castling &= ~(CASTLE_BK | CASTLE_BQ);
    if (!rook_at(7, Color::White)) pos.castling &= ~CASTLE_WK;
    if (!rook_at(0, Color::White)) pos.castling &= ~CASTLE_WQ;
    if (!rook_at(63, Color::Black)) pos.castling &= ~CASTLE_BK;
    if (!rook_at(56, Color::Black)) pos.castling &= ~CASTLE_BQ;

    if (ep != "-") {
        const auto sq = parse_square(ep);
        if (!sq) throw Error("fen: invalid en-passant square");
        const int need = pos.side_to_move == Color::White ? 5 : 2;
        if (rank_of(*sq) != need)
            throw Error("fen: en-passant square on wrong rank for side to move");
        pos.en_passant = static_cast<int8_t>(*sq);
    }

    try {
        pos.halfmove_clock = std::stoi(halfmove);
        pos.fullmove_number = std::stoi(fullmove);
    } catch (const std::exception&) {
        throw Error("fen: move counters must be integers");
    }
    if (pos.halfmove_clock < 0) throw Error("fen: halfmove clock must be >= 0");
    if (pos.fullmove_number < 1) throw Error("fen: fullmove number must be >= 1");

    int white_kings = 0, black_kings = 0;
    for (Square s = 0; s < 64; ++s) {
        const PieceCode p = pos.board[static_cast<size_t>(s)];
        if (p == 0) continue;
        if (kind_of(p) == PieceKind::King) (p > 0 ? white_kings : black_kings)++;
        if (kind_of(p) == PieceKind::Pawn && (rank_of(s) == 0 || rank_of(s) == 7))
            throw Error("fen: pawn on back rank");
    }
    if (white_kings == 0) throw Error("fen: missing white king");
    if (black_kings == 0) throw Error("fen: missing black king");
    if (white_kings > 1) throw Error("fen: two white kings");
    if (black_kings > 1) throw Error("fen: two black kings");

    if (pos.in_check(opposite(pos.side_to_move)))
        throw Error("fen: side not to move is in check");

    pos.hash = compute_hash(pos);
    return pos;
}

std::string Position::fen() const {
    std::ostringstream out;
    for (int rank = 7; rank >= 0; --rank) {
        int empties = 0;
        for (int file = 0; file < 8; ++file) {
            const PieceCode p = board[static_cast<size_t>(make_square(file, rank))];
            if (p == 0) {
                ++empties;
            } else {
                if (empties) out << empties;
                empties = 0;
                out << piece_char(p);
            }
        }
        if (empties) out << empties;
        if (rank > 0) out << '/';
    }
    out << (side_to_move == Color::White ? " w " : " b ");
    if (castling == 0) {
        out << '-';
    } else {
        if (castling & CASTLE_WK) out << 'K';
        if (castling & CASTLE_WQ) out << 'Q';
        if (castling & CASTLE_BK) out << 'k';
        if (castling & CASTLE_BQ) out << 'q';
    }
    out << ' ' << (en_passant >= 0 ? square_name(en_passant) : "-");
    out << ' ' << halfmove_clock << ' ' << fullmove_number;
    return out.str();
}

// ---------------------------------------------------------------- make move

Position Position::apply_unchecked(const Move& m) const {
    const auto& z = zobrist();
    Position next = *this;
    const Square from = m.from;
    const Square to = m.to;
    const PieceCode piece = board[static_cast<size_t>(from)];
    const Color us = side_to_move;
    const PieceKind kind = kind_of(piece);

    uint64_t h = hash;
    h ^= z.castling[next.castling];
    if (next.en_passant >= 0) h ^= z.ep_file[file_of(next.en_passant)];
    next.en_passant = -1;

    bool capture = false;
    const PieceCode target = board[static_cast<size_t>(to)];
    if (target != 0) {
        capture = true;
        h ^= z.psq[piece_index(target)][to];
    } else if (kind == PieceKind::Pawn && to == en_passant) {
        capture = true;
        const Square victim = us == Color::White ? to - 8 : to + 8;
        h ^= z.psq[piece_index(next.board[static_cast<size_t>(victim)])][victim];
        next.board[static_cast<size_t>(victim)] = 0;
    }

    h ^= z.psq[piece_index(piece)][from];
    next.board[static_cast<size_t>(from)] = 0;
    PieceCode placed = piece;
    if (m.promotion != PieceKind::None) placed = make_piece(us, m.promotion);
    next.board[static_cast<size_t>(to)] = placed;
    h ^= z.psq[piece_index(placed)][to];

    if (kind == PieceKind::King && std::abs(to - from) == 2) {  // castle: move the rook
        const Square rook_from = to > from ? from + 3 : from - 4;
        const Square rook_to = to > from ? from + 1 : from - 1;
        const PieceCode rook = next.board[static_cast<size_t>(rook_from)];
        next.board[static_cast<size_t>(rook_from)] = 0;
        next.board[static_cast<size_t>(rook_to)] = rook;
        h ^= z.psq[piece_index(rook)][rook_from];
        h ^= z.psq[piece_index(rook)][rook_to];
    }

    if (kind == PieceKind::King)
        next.castling &= us == Color::White ? ~(CASTLE_WK | CASTLE_WQ) : ~(CASTLE_BK | CASTLE_BQ);
    const auto clear_rook_right = [&](Square s) {
        switch (s) {
            case 0: next.castling &= ~CASTLE_WQ; break;
            case 7: next.castling &= ~CASTLE_WK; break;
            case 56: next.castling &= ~CASTLE_BQ; break;
            case 63: next.castling &= ~CASTLE_BK; break;
            default: break;
        }
    };
    clear_rook_right(from);
    clear_rook_right(to);

    if (kind == PieceKind::Pawn && std::abs(to - from) == 16)
        next.en_passant = static_cast<int8_t>((from + to) / 2);

    next.halfmove_clock = (capture || kind == PieceKind::Pawn) ? 0 : halfmove_clock + 1;
    if (us == Color::Black) ++next.fullmove_number;
    next.side_to_move = opposite(us);

    h ^= z.castling[next.castling];
    if (next.en_passant >= 0) h ^= z.ep_file[file_of(next.en_passant)];
    h ^= z.black_to_move;
    next.hash = h;
    return next;
}

Position Position::apply(const Move& m) const {
    const auto legal = generate_legal_moves(*this);
    if (std::find(legal.begin(), legal.end(), m) == legal.end())
        throw Error("illegal move " + to_uci(m));
    return apply_unchecked(m);
}

// ---------------------------------------------------------------- movegen

namespace {

void push_pawn_move(std::vector<Move>& out, Square from, Square to, bool promoting) {
    if (promoting) {
        for (const PieceKind k :
             {PieceKind::Knight, PieceKind::Bishop, PieceKind::Rook, PieceKind::Queen})
            out.push_back({static_cast<int8_t>(from), static_cast<int8_t>(to), k});
    } else {
        out.push_back({static_cast<int8_t>(from), static_cast<int8_t>(to), PieceKind::None});
    }
}

void generate_pseudo(const Position& pos, std::vector<Move>& out) {
    const Color us = pos.side_to_move;
    const Color them = opposite(us);
    const int forward = us == Color::White ? 8 : -8;
    const int start_rank = us == Color::White ? 1 : 6;
    const int promo_rank = us == Color::White ? 7 : 0;

    const auto push = [&](Square from, Square to) {
        out.push_back({static_cast<int8_t>(from), static_cast<int8_t>(to), PieceKind::None});
    };

    for (Square from = 0; from < 64; ++from) {
        const PieceCode p = pos.board[static_cast<size_t>(from)];
        if (p == 0 || color_of(p) != us) continue;
        const int f = file_of(from);
        const int r = rank_of(from);

        switch (kind_of(p)) {
            case PieceKind::Pawn: {
                const Square one = from + forward;
                if (pos.board[static_cast<size_t>(one)] == 0) {
                    push_pawn_move(out, from, one, rank_of(one) == promo_rank);
                    const Square two = one + forward;
                    if (r == start_rank && pos.board[static_cast<size_t>(two)] == 0)
                        push_pawn_move(out, from, two, false);
                }
                for (const int df : {-1, 1}) {
                    if (f + df < 0 || f + df > 7) continue;
                    const Square to = one + df;
                    const PieceCode t = pos.board[static_cast<size_t>(to)];
                    if (t != 0 && color_of(t) == them)
                        push_pawn_move(out, from, to, rank_of(to) == promo_rank);
                    else if (to == pos.en_passant)
                        push_pawn_move(out, from, to, false);
                }
                break;
            }
            case PieceKind::Knight:
                for (const auto& d : KNIGHT_DELTAS) {
                    const int nf = f + d.df, nr = r + d.dr;
                    if (!on_board(nf, nr)) continue;
                    const Square to = make_square(nf, nr);
                    const PieceCode t = pos.board[static_cast<size_t>(to)];
                    if (t == 0 || color_of(t) == them) push(from, to);
                }
                break;
            case PieceKind::King: {
                for (const auto& d : KING_DELTAS) {
                    const int nf = f + d.df, nr = r + d.dr;
                    if (!on_board(nf, nr)) continue;
                    const Square to = make_square(nf, nr);
                    const PieceCode t = pos.board[static_cast<size_t>(to)];
                    if (t == 0 || color_of(t) == them) push(from, to);
                }
                const Square home = us == Color::White ? 4 : 60;
                if (from == home && !pos.is_attacked(home, them)) {
                    const uint8_t kside = us == Color::White ? CASTLE_WK : CASTLE_BK;
                    const uint8_t qside = us == Color::White ? CASTLE_WQ : CASTLE_BQ;
                    if ((pos.castling & kside) && pos.board[static_cast<size_t>(home + 1)] == 0 &&
                        pos.board[static_cast<size_t>(home + 2)] == 0 &&
                        !pos.is_attacked(home + 1, them) && !pos.is_attacked(home + 2, them))
                        push(from, home + 2);
                    if ((pos.castling & qside) && pos.board[static_cast<size_t>(home - 1)] == 0 &&
                        pos.board[static_cast<size_t>(home - 2)] == 0 &&
                        pos.board[static_cast<size_t>(home - 3)] == 0 &&
                        !pos.is_attacked(home - 1, them) && !pos.is_attacked(home - 2, them))
                        push(from, home - 2);
                }
                break;
            }
            case PieceKind::Bishop:
            case PieceKind::Rook:
            case PieceKind::Queen: {
                const PieceKind kind = kind_of(p);
                const auto scan = [&](const Delta* dirs) {
                    for (int i = 0; i < 4; ++i) {
                        int nf = f + dirs[i].df, nr = r + dirs[i].dr;
                        while (on_board(nf, nr)) {
                            const Square to = make_square(nf, nr);
                            const PieceCode t = pos.board[static_cast<size_t>(to)];
                            if (t == 0) {
                                push(from, to);
                            } else {
                                if (color_of(t) == them) push(from, to);
                                break;
                            }
                            nf += dirs[i].df;
                            nr += dirs[i].dr;
                        }
                    }
                };
                if (kind != PieceKind::Bishop) scan(ROOK_DIRS);
                if (kind != PieceKind::Rook) scan(BISHOP_DIRS);
                break;
            }
            default: break;
        }
    }
}

}  // namespace

std::vector<Move> generate_legal_moves(const Position& pos) {
    std::vector<Move> pseudo;
    pseudo.reserve(48);
    generate_pseudo(pos, pseudo);

    std::vector<Move> legal;
    legal.reserve(pseudo.size());
    const Color us = pos.side_to_move;
    for (const Move& m : pseudo) {
        const Position next = pos.apply_unchecked(m);
        if (!next.in_check(us)) legal.push_back(m);
    }
    std::sort(legal.begin(), legal.end(), [](const Move& a, const Move& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.promotion < b.promotion;
    });
    return legal;
}

uint64_t perft(const Position& pos, int depth) {
    if (depth <= 0) return 1;
    const auto moves = generate_legal_moves(pos);
    if (depth == 1) return moves.size();
    uint64_t nodes = 0;
    for (const Move& m : moves) nodes += perft(pos.apply_unchecked(m), depth - 1);
    return nodes;
}

// ---------------------------------------------------------------- status

namespace {

bool insufficient_material(const Position& pos) {
    int knights = 0;
    int bishops = 0;
    int white_bishops = 0;
    bool bishop_square_color[2] = {false, false};  // [square color] seen
    for (Square s = 0; s < 64; ++s) {
        const PieceCode p = pos.board[static_cast<size_t>(s)];
        if (p == 0) continue;
        switch (kind_of(p)) {
            case PieceKind::King: break;
            case PieceKind::Knight: ++knights; break;
            case PieceKind::Bishop:
                ++bishops;
                if (p > 0) ++white_bishops;
                bishop_square_color[(file_of(s) + rank_of(s)) & 1] = true;
                break;
            default: return false;  // pawn, rook or queen: mating material
        }
    }
    if (knights == 0 && bishops == 0) return true;                    // K vs K
    if (knights == 1 && bishops == 0) return true;                    // KN vs K
    if (knights == 0 && bishops == 1) return true;                    // KB vs K
    if (knights == 0 && bishops == 2 && white_bishops == 1)           // KB vs KB with both
        return !(bishop_square_color[0] && bishop_square_color[1]);   // bishops on one square color
    return false;
}

}  // namespace

std::string to_string(StatusKind k) {
    switch (k) {
        case StatusKind::Ongoing: return "ongoing";
        case StatusKind::Checkmate: return "checkmate";
        case StatusKind::Stalemate: return "stalemate";
        case StatusKind::DrawFiftyMove: return "draw by fifty-move rule";
        case StatusKind::DrawThreefold: return "draw by threefold repetition";
        case StatusKind::DrawInsufficientMaterial: return "draw by insufficient material";
        case StatusKind::DrawAdjudicated: return "draw by adjudication";
    }
    return "unknown";
}

GameStatus game_status(const Position& pos, std::span<const uint64_t> prior_hashes) {
    if (generate_legal_moves(pos).empty()) {
        if (pos.in_check(pos.side_to_move))
            return {StatusKind::Checkmate, opposite(pos.side_to_move)};
        return {StatusKind::Stalemate, std::nullopt};
    }
    if (pos.halfmove_clock >= 100) return {StatusKind::DrawFiftyMove, std::nullopt};

    size_t repeats = 1;  // the current occurrence
    for (const uint64_t h : prior_hashes)
        if (h == pos.hash) ++repeats;
    if (repeats >= 3) return {StatusKind::DrawThreefold, std::nullopt};

    if (insufficient_material(pos)) return {StatusKind::DrawInsufficientMaterial, std::nullopt};
    return {StatusKind::Ongoing, std::nullopt};
}

Position color_flip(const Position& pos) {
    Position out;
    for (Square s = 0; s < 64; ++s) {
        const PieceCode p = pos.board[static_cast<size_t>(mirror_vertical(s))];
        out.board[static_cast<size_t>(s)] = static_cast<PieceCode>(-p);
    }
    out.side_to_move = opposite(pos.side_to_move);
    out.castling = 0;
    if (pos.castling & CASTLE_WK) out.castling |= CASTLE_BK;
    if (pos.castling & CASTLE_WQ) out.castling |= CASTLE_BQ;
    if (pos.castling & CASTLE_BK) out.castling |= CASTLE_WK;
    if (pos.castling & CASTLE_BQ) out.castling |= CASTLE_WQ;
    out.en_passant = pos.en_passant >= 0 ? static_cast<int8_t>(mirror_vertical(pos.en_passant)) : -1;
    out.halfmove_clock = pos.halfmove_clock;
    out.fullmove_number = pos.fullmove_number;
    out.hash = compute_hash(out);
    return out;
}

}  // namespace phoenix
