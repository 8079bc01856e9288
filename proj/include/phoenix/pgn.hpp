#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "phoenix/chess.hpp"

namespace phoenix {

// Standard algebraic notation for a legal move, with +/# suffix.
std::string to_san(const Position& pos, const Move& m);

// Inverse of to_san; tolerant of missing +/# suffixes. Throws Error when the
// text matches no legal move.
Move san_to_move(const Position& pos, const std::string& san);

struct PgnGame {
    std::vector<std::pair<std::string, std::string>> tags;
    std::vector<std::string> san_moves;
    std::string result;  // movetext terminator: 1-0, 0-1, 1/2-1/2 or *

    const std::string* tag(const std::string& name) const;
};

struct PgnHeader {
    std::string event = "?";
    std::string site = "?";
    std::string date = "????.??.??";
    std::string round = "?";
    std::string white = "?";
    std::string black = "?";
};

// Seven Tag Roster plus SetUp/FEN when the game starts away from the
// standard position; movetext in SAN wrapped at 80 columns.
void write_pgn_game(std::ostream& out, const PgnHeader& header, const Position& opening,
                    std::span<const Move> moves, const std::string& result);

std::vector<PgnGame> read_pgn(std::istream& in);
std::vector<PgnGame> read_pgn_file(const std::string& path);  // throws Error if unreadable

}  // namespace phoenix
