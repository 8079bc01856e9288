#pragma once

#include <string>
#include <utility>

namespace phoenix {

struct MatchSummary {
    int wins = 0;
    int draws = 0;
    int losses = 0;
    double opponent_elo = 0.0;

    int total() const { return wins + draws + losses; }
};

// (wins + draws/2) / total; throws Error on zero games.
double score_fraction(const MatchSummary& summary);

// opponent_elo + 400*log10(s/(1-s)), with the difference clamped to +-800 so
// perfect scores stay finite.
double performance_rating(double score, double opponent_elo);

// Tallies the subject's results over both colors from a PGN file and rates
// the performance. Throws Error if the subject appears in no game.
std::pair<MatchSummary, double> rate_from_pgn(const std::string& pgn_path,
                                              const std::string& subject_name,
                                              double opponent_elo);

}  // namespace phoenix
