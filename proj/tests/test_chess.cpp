#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "phoenix/chess.hpp"
#include "test_util.hpp"

using namespace phoenix;

TEST_CASE("fen parses the start position") {
    const Position pos = Position::from_fen(START_FEN);
    int pieces = 0;
    for (Square s = 0; s < 64; ++s)
        if (pos.at(s) != 0) ++pieces;
    CHECK(pieces == 32);
    CHECK(pos.side_to_move == Color::White);
    CHECK(pos.castling == (CASTLE_WK | CASTLE_WQ | CASTLE_BK | CASTLE_BQ));
    CHECK(pos.en_passant == -1);
    CHECK(pos.at(4) == make_piece(Color::White, PieceKind::King));
}

TEST_CASE("fen validation names the violated rule") {
    CHECK_THROWS_WITH_AS(Position::from_fen("8/8/8/8/8/8/8/8 w - - 0 1"),
                         doctest::Contains("missing white king"), Error);
    CHECK_THROWS_AS(Position::from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR"), Error);
    CHECK_THROWS_WITH_AS(
        Position::from_fen("K6k/8/8/8/8/8/8/K7 w - - 0 1"),
        doctest::Contains("two white kings"), Error);
    CHECK_THROWS_WITH_AS(Position::from_fen("P6k/8/8/8/8/8/8/4K3 w - - 0 1"),
                         doctest::Contains("pawn on back rank"), Error);
    // White to move while the black king is attacked.
    CHECK_THROWS_WITH_AS(Position::from_fen("4k3/4R3/8/8/8/8/8/4K3 w - - 0 1"),
                         doctest::Contains("side not to move"), Error);
    CHECK_THROWS_AS(Position::from_fen("4k3/8/8/8/8/8/8/4K3 w - e3 0 1"), Error);
    CHECK_THROWS_AS(Position::from_fen("4k3/8/8/8/8/8/8/4K3 w - - 0 0"), Error);
}

TEST_CASE("fen handles a sparse hand-checked position") {
    const Position pos = Position::from_fen("6k1/8/6K1/8/8/8/8/R7 w - - 0 1");
    int pieces = 0;
    for (Square s = 0; s < 64; ++s)
        if (pos.at(s) != 0) ++pieces;
    CHECK(pieces == 3);
    CHECK(pos.side_to_move == Color::White);
    CHECK(pos.at(*parse_square("a1")) == make_piece(Color::White, PieceKind::Rook));
    CHECK(pos.at(*parse_square("g8")) == make_piece(Color::Black, PieceKind::King));
    CHECK(pos.at(*parse_square("g6")) == make_piece(Color::White, PieceKind::King));
}

TEST_CASE("to_fen round trips") {
    CHECK(Position::startpos().fen() == START_FEN);
    Rng rng(7);
    for (int i = 0; i < 120; ++i) {
        const Position pos = testutil::random_position(rng, 80);
        const Position reparsed = Position::from_fen(pos.fen());
        CHECK(reparsed == pos);
    }
}

TEST_CASE("to_fen records the en-passant square after a double push") {
    const Position pos = Position::startpos().apply(*move_from_uci("e2e4"));
    CHECK(pos.fen() == "rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e3 0 1");
}

TEST_CASE("start position has 20 legal moves") {
    CHECK(generate_legal_moves(Position::startpos()).size() == 20);
}

TEST_CASE("stalemate position has no legal moves") {
    const Position pos = Position::from_fen("7k/5Q2/6K1/8/8/8/8/8 b - - 0 1");
    CHECK(generate_legal_moves(pos).empty());
    CHECK(game_status(pos, {}).kind == StatusKind::Stalemate);
}

TEST_CASE("perft matches published counts through depth 4") {
    const Position start = Position::startpos();
    CHECK(perft(start, 0) == 1);
    CHECK(perft(start, 1) == 20);
    CHECK(perft(start, 2) == 400);
    CHECK(perft(start, 3) == 8902);
    CHECK(perft(start, 4) == 197281);
}

TEST_CASE("perft covers castling, promotion and en-passant corners") {
    // Kiwipete and friends, with published node counts.
    const Position kiwipete = Position::from_fen(
        "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1");
    CHECK(perft(kiwipete, 1) == 48);
    CHECK(perft(kiwipete, 2) == 2039);
    CHECK(perft(kiwipete, 3) == 97862);

    const Position endgame = Position::from_fen("8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1");
    CHECK(perft(endgame, 1) == 14);
    CHECK(perft(endgame, 2) == 191);
    CHECK(perft(endgame, 3) == 2812);
    CHECK(perft(endgame, 4) == 43238);

    const Position promotions = Position::from_fen(
        "r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1");
    CHECK(perft(promotions, 1) == 6);
    CHECK(perft(promotions, 2) == 264);
    CHECK(perft(promotions, 3) == 9467);
}

TEST_CASE("make_move applies the double push") {
    const Position start = Position::startpos();
    const Position next = start.apply(Move::of(*parse_square("e2"), *parse_square("e4")));
    CHECK(next.side_to_move == Color::Black);
    CHECK(next.en_passant == *parse_square("e3"));
    CHECK(next.halfmove_clock == 0);
    CHECK(next.fullmove_number == 1);
}

TEST_CASE("make_move handles kingside castling") {
    const Position pos =
        Position::from_fen("r3k2r/pppppppp/8/8/8/8/PPPPPPPP/R3K2R w KQkq - 0 1");
    const Position next = pos.apply(Move::of(*parse_square("e1"), *parse_square("g1")));
    CHECK(next.at(*parse_square("g1")) == make_piece(Color::White, PieceKind::King));
    CHECK(next.at(*parse_square("f1")) == make_piece(Color::White, PieceKind::Rook));
    CHECK(next.at(*parse_square("h1")) == 0);
    CHECK((next.castling & (CASTLE_WK | CASTLE_WQ)) == 0);
    CHECK((next.castling & (CASTLE_BK | CASTLE_BQ)) == (CASTLE_BK | CASTLE_BQ));
}

TEST_CASE("make_move resets the halfmove clock on captures") {
    Position pos = Position::from_fen(
        "rnbqkbnr/ppp1pppp/8/3p4/4P3/8/PPPP1PPP/RNBQKBNR w KQkq d6 5 3");
    pos = pos.apply(*move_from_uci("e4d5"));
    CHECK(pos.halfmove_clock == 0);
}

TEST_CASE("make_move rejects illegal moves") {
    const Position start = Position::startpos();
    CHECK_THROWS_AS(start.apply(Move::of(*parse_square("e2"), *parse_square("e5"))), Error);
    CHECK_THROWS_AS(start.apply(Move::of(*parse_square("a1"), *parse_square("a5"))), Error);
}

TEST_CASE("en passant capture removes the pushed pawn") {
    Position pos = Position::from_fen("4k3/8/8/8/4p3/8/3P4/4K3 w - - 0 1");
    pos = pos.apply(*move_from_uci("d2d4"));
    CHECK(pos.en_passant == *parse_square("d3"));
    pos = pos.apply(*move_from_uci("e4d3"));
    CHECK(pos.at(*parse_square("d4")) == 0);
    CHECK(pos.at(*parse_square("d3")) == make_piece(Color::Black, PieceKind::Pawn));
}

TEST_CASE("promotion replaces the pawn") {
    const Position pos = Position::from_fen("4k3/P7/8/8/8/8/8/4K3 w - - 0 1");
    const auto moves = generate_legal_moves(pos);
    // a7a8 with four promotion pieces plus two king moves... count promotions.
    int promotions = 0;
    for (const auto& m : moves)
        if (m.promotion != PieceKind::None) ++promotions;
    CHECK(promotions == 4);
    const Position next = pos.apply(*move_from_uci("a7a8q"));
    CHECK(next.at(*parse_square("a8")) == make_piece(Color::White, PieceKind::Queen));
}

TEST_CASE("game_status detects back-rank mate") {
    const Position pos = Position::from_fen("6k1/8/6K1/8/8/8/8/R7 w - - 0 1");
    const Position mated = pos.apply(*move_from_uci("a1a8"));
    const GameStatus status = game_status(mated, {});
    CHECK(status.kind == StatusKind::Checkmate);
    CHECK(*status.winner == Color::White);
}

TEST_CASE("game_status detects draws") {
    CHECK(game_status(Position::from_fen("4k3/8/8/8/8/8/8/4K3 w - - 0 1"), {}).kind ==
          StatusKind::DrawInsufficientMaterial);
    CHECK(game_status(Position::from_fen("4k3/8/8/8/8/8/8/2B1K3 w - - 0 1"), {}).kind ==
          StatusKind::DrawInsufficientMaterial);
    CHECK(game_status(Position::from_fen("4k3/8/8/8/8/8/8/1N2K3 b - - 0 1"), {}).kind ==
          StatusKind::DrawInsufficientMaterial);
    // Same-color bishops: c1 and f4 are both dark squares.
    CHECK(game_status(Position::from_fen("4k3/8/8/8/5b2/8/8/2B1K3 w - - 0 1"), {}).kind ==
          StatusKind::DrawInsufficientMaterial);
    // Opposite-color bishops can still mate.
    CHECK(game_status(Position::from_fen("4k3/8/8/8/4b3/8/8/2B1K3 w - - 0 1"), {}).kind ==
          StatusKind::Ongoing);
    CHECK(game_status(Position::from_fen("4k3/8/8/8/8/8/8/3QK3 w - - 99 80"), {}).kind ==
          StatusKind::Ongoing);
    CHECK(game_status(Position::from_fen("4k3/8/8/8/8/8/8/3QK3 w - - 100 80"), {}).kind ==
          StatusKind::DrawFiftyMove);
}

TEST_CASE("game_status detects threefold repetition") {
    Position pos = Position::startpos();
    std::vector<uint64_t> history;
    const char* shuffle[] = {"g1f3", "g8f6", "f3g1", "f6g8"};
    for (int round = 0; round < 2; ++round) {
        for (const char* text : shuffle) {
            history.push_back(pos.hash);
            pos = pos.apply(*move_from_uci(text));
        }
    }
    // The start position now stands for the third time.
    CHECK(game_status(pos, history).kind == StatusKind::DrawThreefold);
    // One repetition fewer is not a draw.
    const std::vector<uint64_t> shorter(history.begin(), history.begin() + 4);
    Position mid = Position::startpos();
    for (int i = 0; i < 4; ++i) mid = mid.apply(*move_from_uci(shuffle[i]));
    CHECK(game_status(mid, shorter).kind == StatusKind::Ongoing);
}

TEST_CASE("checkmate takes precedence over the fifty-move rule") {
    Position pos = Position::from_fen("6k1/8/6K1/8/8/8/8/R7 w - - 99 80");
    pos = pos.apply(*move_from_uci("a1a8"));
    CHECK(pos.halfmove_clock == 100);
    CHECK(game_status(pos, {}).kind == StatusKind::Checkmate);
}

TEST_CASE("random play never leaves the mover's king capturable") {
    Rng rng(42);
    int checked = 0;
    while (checked < 1000) {
        const Position pos = testutil::random_position(rng, 60);
        for (const Move& m : generate_legal_moves(pos)) {
            const Position next = pos.apply_unchecked(m);
            REQUIRE(!next.in_check(pos.side_to_move));
            ++checked;
        }
    }
}

TEST_CASE("apply does not mutate the source position") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const Position pos = testutil::random_ongoing_position(rng, 40);
        const Position copy = pos;
        const auto moves = generate_legal_moves(pos);
        (void)pos.apply_unchecked(moves[rng.index(moves.size())]);
        CHECK(pos == copy);
    }
}

TEST_CASE("incremental hash matches the from-scratch hash") {
    Rng rng(3);
    for (int game = 0; game < 20; ++game) {
        Position pos = Position::startpos();
        for (int ply = 0; ply < 80; ++ply) {
            const auto moves = generate_legal_moves(pos);
            if (moves.empty()) break;
            pos = pos.apply_unchecked(moves[rng.index(moves.size())]);
            REQUIRE(pos.hash == compute_hash(pos));
        }
    }
}

TEST_CASE("legal move list is sorted and duplicate free") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const Position pos = testutil::random_position(rng, 70);
        const auto moves = generate_legal_moves(pos);
        for (size_t k = 1; k < moves.size(); ++k) {
            const Move& a = moves[k - 1];
            const Move& b = moves[k];
            const auto key = [](const Move& m) {
                return std::tuple<int, int, int>(m.from, m.to, static_cast<int>(m.promotion));
            };
            CHECK(key(a) < key(b));
        }
    }
}

TEST_CASE("color_flip is an involution and preserves legality") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Position pos = testutil::random_position(rng, 60);
        const Position flipped = color_flip(pos);
        CHECK(color_flip(flipped) == pos);
        CHECK(generate_legal_moves(flipped).size() == generate_legal_moves(pos).size());
    }
}

TEST_CASE("uci move text round trips") {
    CHECK(to_uci(Move::of(*parse_square("e2"), *parse_square("e4"))) == "e2e4");
    CHECK(to_uci(Move{*parse_square("e7"), *parse_square("e8"), PieceKind::Queen}) == "e7e8q");
    CHECK(move_from_uci("e2e4") == Move::of(*parse_square("e2"), *parse_square("e4")));
    CHECK(!move_from_uci("e2e9").has_value());
    CHECK(!move_from_uci("zz").has_value());
}
