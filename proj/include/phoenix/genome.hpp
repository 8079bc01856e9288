#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "phoenix/chess.hpp"
#include "phoenix/rng.hpp"

namespace phoenix {

inline constexpr double GENE_MIN = -100.0;
inline constexpr double GENE_MAX = 100.0;
inline constexpr int PVT_TABLE_COUNT = 10;
inline constexpr int CHROMOSOME_LENGTH = PVT_TABLE_COUNT * 64;

enum class GamePhase : int8_t { MiddleGame, EndGame };

// Table slots in chromosome order. Rook and queen have no endgame tables;
// in the endgame those pieces fall back to their middle-game tables.
enum class PvtTable : int {
    PawnMg = 0,
    KnightMg,
    BishopMg,
    RookMg,
    QueenMg,
    KingMg,
    PawnEg,
    KnightEg,
    BishopEg,
    KingEg,
};

PvtTable pvt_table_for(PieceKind kind, GamePhase phase);

// Ten 64-entry tables of per-square bonuses in centipawns, stored from
// White's perspective (a1=0 ... h8=63). Black reads the vertically
// mirrored square.
struct PvtSet {
    std::array<std::array<double, 64>, PVT_TABLE_COUNT> tables{};

    double value(PieceKind kind, GamePhase phase, Square white_perspective_sq) const {
        return tables[static_cast<size_t>(pvt_table_for(kind, phase))]
                     [static_cast<size_t>(white_perspective_sq)];
    }

    bool operator==(const PvtSet&) const = default;
};

// The unit of optimization: all ten tables concatenated, 640 genes.
struct Chromosome {
    std::array<double, CHROMOSOME_LENGTH> genes{};

    bool operator==(const Chromosome&) const = default;
};

Chromosome flatten(const PvtSet& pvt);
PvtSet unflatten(const Chromosome& c);
PvtSet unflatten(std::span<const double> genes);  // throws Error unless exactly 640 genes

Chromosome chromosome_from_span(std::span<const double> genes);  // length-checked
bool genes_in_bounds(std::span<const double> genes);

// 640 i.i.d. uniform genes over [GENE_MIN, GENE_MAX].
Chromosome random_chromosome(Rng& rng);

struct StoredChromosome {
    std::string id;
    int generation = 0;
    double fitness = 0.0;
    Chromosome genes;

    bool operator==(const StoredChromosome&) const = default;
};

// Line-oriented text store (.pvt): one record per line,
//   id <TAB> generation <TAB> fitness <TAB> g0 g1 ... g639
// with numbers printed to 6 fractional digits. '#' starts a comment line.
void save_store(const std::string& path, std::span<const StoredChromosome> records);
void append_store(const std::string& path, std::span<const StoredChromosome> records);
std::vector<StoredChromosome> load_store(const std::string& path);

}  // namespace phoenix
