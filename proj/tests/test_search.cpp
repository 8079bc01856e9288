#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <chrono>
#include <future>
#include <thread>

#include "oracle.hpp"
#include "phoenix/search.hpp"
#include "test_util.hpp"

using namespace phoenix;

namespace {

const SearchOptions plain_options = [] {
    SearchOptions o;
    o.use_tt = false;
    return o;
}();

}  // namespace

TEST_CASE("order_moves on an empty list is empty") {
    CHECK(order_moves(Position::startpos(), {}, PvtSet{}).empty());
}

TEST_CASE("order_moves is stable for equal keys") {
    const Position start = Position::startpos();
    const auto generated = generate_legal_moves(start);
    CHECK(order_moves(start, generated, PvtSet{}) == generated);
}

TEST_CASE("order_moves prefers high-value destination squares") {
    PvtSet pvt;
    auto& knight_mg = pvt.tables[static_cast<size_t>(PvtTable::KnightMg)];
    knight_mg[static_cast<size_t>(*parse_square("d4"))] = 30.0;
    knight_mg[static_cast<size_t>(*parse_square("a3"))] = -20.0;
    // Blocked files keep this capture-free; queen+rook per side = middle game.
    const Position pos = Position::from_fen("3qk2r/8/8/8/8/8/2NP3P/3QK2R w - - 0 1");
    REQUIRE(detect_phase(pos) == GamePhase::MiddleGame);
    const auto ordered = order_moves(pos, generate_legal_moves(pos), pvt);
    const Move to_d4 = Move::of(*parse_square("c2"), *parse_square("d4"));
    const Move to_a3 = Move::of(*parse_square("c2"), *parse_square("a3"));
    CHECK(ordered.front() == to_d4);
    const auto index_of = [&](const Move& m) {
        return std::find(ordered.begin(), ordered.end(), m) - ordered.begin();
    };
    CHECK(index_of(to_d4) < index_of(to_a3));
}

TEST_CASE("order_moves puts captures first, most valuable victim first") {
    // White can take the queen with a pawn, or a pawn with the queen.
    const Position pos = Position::from_fen("4k3/8/8/3q1p2/4P3/8/8/3QK3 w - - 0 1");
    const auto ordered = order_moves(pos, generate_legal_moves(pos), PvtSet{});
    const Move pawn_takes_queen = Move::of(*parse_square("e4"), *parse_square("d5"));
    const Move pawn_takes_pawn = Move::of(*parse_square("e4"), *parse_square("f5"));
    CHECK(ordered[0] == pawn_takes_queen);
    CHECK(is_capture(pos, ordered[1]));
    CHECK(ordered[1] == pawn_takes_pawn);
    for (size_t i = 0; i + 1 < ordered.size(); ++i)
        if (!is_capture(pos, ordered[i])) CHECK(!is_capture(pos, ordered[i + 1]));
}

TEST_CASE("order_moves returns a permutation of its input") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        const Position pos = testutil::random_position(rng, 60);
        const PvtSet pvt = testutil::random_pvt(rng);
        auto moves = generate_legal_moves(pos);
        auto ordered = order_moves(pos, moves, pvt);
        REQUIRE(ordered.size() == moves.size());
        auto sorted_in = moves;
        auto sorted_out = ordered;
        const auto key = [](const Move& m) {
            return std::tuple(m.from, m.to, static_cast<int>(m.promotion));
        };
        std::sort(sorted_in.begin(), sorted_in.end(),
                  [&](const Move& a, const Move& b) { return key(a) < key(b); });
        std::sort(sorted_out.begin(), sorted_out.end(),
                  [&](const Move& a, const Move& b) { return key(a) < key(b); });
        CHECK(sorted_in == sorted_out);
    }
}

TEST_CASE("search finds the back-rank mate at depth 2") {
    const Position pos = Position::from_fen("6k1/8/6K1/8/8/8/8/R7 w - - 0 1");
    const SearchResult result =
        search_best_move(pos, SearchLimits::depth(2), PvtSet{}, nullptr, plain_options);
    CHECK(result.best_move == *move_from_uci("a1a8"));
    CHECK(result.score >= MATE_SCORE - 2);
    CHECK(game_status(pos.apply(result.best_move), {}).kind == StatusKind::Checkmate);
}

TEST_CASE("alpha-beta equals the unpruned minimax oracle at depths 1-3") {
    Rng rng(2024);
    int positions = 0;
    while (positions < 22) {
        const Position pos = testutil::random_ongoing_position(rng, 70);
        const PvtSet pvt = positions % 2 == 0 ? PvtSet{} : testutil::random_pvt(rng);
        for (int depth = 1; depth <= 3; ++depth) {
            const SearchResult got =
                search_best_move(pos, SearchLimits::depth(depth), pvt, nullptr, plain_options);
            const double want = testoracle::minimax_unpruned(pos, depth, 0, pvt);
            REQUIRE(got.score == want);
            REQUIRE(got.best_move == testoracle::minimax_best_move(pos, depth, pvt));
            REQUIRE(got.pv.front() == got.best_move);
        }
        ++positions;
    }
}

TEST_CASE("quiescence keeps the queen out of the pawn's mouth") {
    // White queen on d5 is attacked by the c6 pawn.
    const Position pos = Position::from_fen("4k3/8/2p5/3Q4/8/8/8/4K3 w - - 0 1");
    const SearchResult result =
        search_best_move(pos, SearchLimits::depth(1), PvtSet{}, nullptr, plain_options);
    const Position after = pos.apply(result.best_move);
    // From White's view the position after the reply must not be a lost queen.
    const double value = -testoracle::quiescence_unpruned(after, 1, PvtSet{});
    CHECK(value > -400.0);
}

TEST_CASE("search never returns an illegal move") {
    Rng rng(88);
    for (int i = 0; i < 30; ++i) {
        const Position pos = testutil::random_ongoing_position(rng, 90);
        const SearchResult result = search_best_move(pos, SearchLimits::depth(2),
                                                     testutil::random_pvt(rng));
        const auto legal = generate_legal_moves(pos);
        CHECK(std::find(legal.begin(), legal.end(), result.best_move) != legal.end());
    }
}

TEST_CASE("search refuses a root without legal moves") {
    const Position stalemate = Position::from_fen("7k/5Q2/6K1/8/8/8/8/8 b - - 0 1");
    CHECK_THROWS_AS(search_best_move(stalemate, SearchLimits::depth(2), PvtSet{}), Error);
    CHECK_THROWS_AS(search_best_move(Position::startpos(), SearchLimits{}, PvtSet{}), Error);
}

TEST_CASE("move ordering reduces the searched tree on most positions") {
    Rng rng(404);
    int better_or_equal = 0;
    const int total = 50;
    SearchOptions ordered = plain_options;
    SearchOptions unordered = plain_options;
    unordered.use_ordering = false;
    for (int i = 0; i < total; ++i) {
        const Position pos = testutil::random_ongoing_position(rng, 60);
        const uint64_t with =
            search_best_move(pos, SearchLimits::depth(3), PvtSet{}, nullptr, ordered).nodes;
        const uint64_t without =
            search_best_move(pos, SearchLimits::depth(3), PvtSet{}, nullptr, unordered).nodes;
        if (with <= without) ++better_or_equal;
    }
    CHECK(better_or_equal >= (total * 8) / 10);
}

TEST_CASE("searching a mirrored position negates the white-perspective score") {
    Rng rng(55);
    for (int i = 0; i < 15; ++i) {
        const Position pos = testutil::random_ongoing_position(rng, 60);
        const Position flipped = color_flip(pos);
        const PvtSet pvt = testutil::random_pvt(rng);
        const SearchResult a =
            search_best_move(pos, SearchLimits::depth(3), pvt, nullptr, plain_options);
        const SearchResult b =
            search_best_move(flipped, SearchLimits::depth(3), pvt, nullptr, plain_options);
        // Scores are mover-relative, so mirrored searches agree exactly; in
        // White-perspective terms the values negate.
        CHECK(a.score == b.score);
    }
}

TEST_CASE("fixed limits give deterministic results") {
    Rng rng(66);
    const Position pos = testutil::random_ongoing_position(rng, 40);
    const PvtSet pvt = testutil::random_pvt(rng);
    const SearchResult d1 = search_best_move(pos, SearchLimits::depth(4), pvt);
    const SearchResult d2 = search_best_move(pos, SearchLimits::depth(4), pvt);
    CHECK(d1.best_move == d2.best_move);
    CHECK(d1.score == d2.score);
    CHECK(d1.nodes == d2.nodes);

    const SearchResult n1 = search_best_move(pos, SearchLimits::nodes(5000), pvt);
    const SearchResult n2 = search_best_move(pos, SearchLimits::nodes(5000), pvt);
    CHECK(n1.best_move == n2.best_move);
    CHECK(n1.depth_reached == n2.depth_reached);
    CHECK(n1.nodes == n2.nodes);
}

TEST_CASE("the stop signal is honored within 50 milliseconds") {
    const Position pos = Position::from_fen(
        "r1bqkbnr/pppp1ppp/2n5/4p3/4P3/5N2/PPPP1PPP/RNBQKB1R w KQkq - 2 3");
    std::atomic<bool> stop{false};
    std::promise<SearchResult> promise;
    auto future = promise.get_future();
    std::thread worker([&] {
        promise.set_value(search_best_move(pos, SearchLimits::depth(40), PvtSet{}, &stop));
    });
    std::this_thread::sleep_for(std::chrono::milliseconds(60));
    const auto asked = std::chrono::steady_clock::now();
    stop.store(true);
    future.wait();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - asked)
                             .count();
    worker.join();
    const SearchResult result = future.get();
    CHECK(elapsed <= 50);
    CHECK(result.depth_reached >= 1);
    const auto legal = generate_legal_moves(pos);
    CHECK(std::find(legal.begin(), legal.end(), result.best_move) != legal.end());
}

TEST_CASE("mate scores are encoded as MATE_SCORE minus ply") {
    // Mate in two: scores two plies from the root.
    const Position pos = Position::from_fen("6k1/8/5K2/8/8/8/8/R7 w - - 0 1");
    const SearchResult result =
        search_best_move(pos, SearchLimits::depth(4), PvtSet{}, nullptr, plain_options);
    CHECK(result.score <= MATE_SCORE - 1);
    CHECK(result.score >= MATE_SCORE - 4);
}
