#include "phoenix/rating.hpp"

#include <algorithm>
#include <cmath>

#include "phoenix/chess.hpp"
#include "phoenix/pgn.hpp"

namespace phoenix {

double score_fraction(const MatchSummary& summary) {
    if (summary.total() < 1) throw Error("rating: at least one game required");
    return (summary.wins + 0.5 * summary.draws) / summary.total();
}

double performance_rating(double score, double opponent_elo) {
    if (score < 0.0 || score > 1.0) throw Error("rating: score fraction must be in [0, 1]");
    double diff;
    if (score <= 0.0) diff = -800.0;
    else if (score >= 1.0) diff = 800.0;
    else diff = std::clamp(400.0 * std::log10(score / (1.0 - score)), -800.0, 800.0);
    return opponent_elo + diff;
}

std::pair<MatchSummary, double> rate_from_pgn(const std::string& pgn_path,
                                              const std::string& subject_name,
                                              double opponent_elo) {
    MatchSummary summary;
    summary.opponent_elo = opponent_elo;
    for (const PgnGame& game : read_pgn_file(pgn_path)) {
        const std::string* white = game.tag("White");
        const std::string* black = game.tag("Black");
        const std::string* result = game.tag("Result");
        const std::string outcome = result ? *result : game.result;
        const bool as_white = white && *white == subject_name;
        const bool as_black = black && *black == subject_name;
        if (!as_white && !as_black) continue;
        if (outcome == "1/2-1/2") summary.draws += 1;
        else if (outcome == "1-0") (as_white ? summary.wins : summary.losses) += 1;
        else if (outcome == "0-1") (as_white ? summary.losses : summary.wins) += 1;
        // '*' and missing results are not counted
    }
    if (summary.total() == 0)
        throw Error("rating: no finished games for '" + subject_name + "' in " + pgn_path);
    return {summary, performance_rating(score_fraction(summary), opponent_elo)};
}

}  // namespace phoenix
