#include "phoenix/genome.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace phoenix {

PvtTable pvt_table_for(PieceKind kind, GamePhase phase) {
    if (phase == GamePhase::MiddleGame) {
        switch (kind) {
            case PieceKind::Pawn: return PvtTable::PawnMg;
            case PieceKind::Knight: return PvtTable::KnightMg;
            case PieceKind::Bishop: return PvtTable::BishopMg;
            case PieceKind::Rook: return PvtTable::RookMg;
            case PieceKind::Queen: return PvtTable::QueenMg;
            case PieceKind::King: return PvtTable::KingMg;
            default: break;
        }
    } else {
        switch (kind) {
            case PieceKind::Pawn: return PvtTable::PawnEg;
            case PieceKind::Knight: return PvtTable::KnightEg;
            case PieceKind::Bishop: return PvtTable::BishopEg;
            case PieceKind::King: return PvtTable::KingEg;
            case PieceKind::Rook: return PvtTable::RookMg;    // no endgame table
            case PieceKind::Queen: return PvtTable::QueenMg;  // no endgame table
            default: break;
        }
    }
    throw Error("no positional value table for empty square");
}

Chromosome flatten(const PvtSet& pvt) {
    Chromosome c;
    size_t g = 0;
    for (const auto& table : pvt.tables)
        for (const double v : table) c.genes[g++] = v;
    return c;
}

PvtSet unflatten(const Chromosome& c) {
    PvtSet pvt;
    size_t g = 0;
    for (auto& table : pvt.tables)
        for (double& v : table) v = c.genes[g++];
    return pvt;
}

PvtSet unflatten(std::span<const double> genes) {
    return unflatten(chromosome_from_span(genes));
}

Chromosome chromosome_from_span(std::span<const double> genes) {
    if (genes.size() != CHROMOSOME_LENGTH)
        throw Error("chromosome must have exactly " + std::to_string(CHROMOSOME_LENGTH) +
                    " genes, got " + std::to_string(genes.size()));
    Chromosome c;
    std::copy(genes.begin(), genes.end(), c.genes.begin());
    return c;
}

bool genes_in_bounds(std::span<const double> genes) {
    for (const double g : genes)
        if (!(g >= GENE_MIN && g <= GENE_MAX)) return false;
    return true;
}

Chromosome random_chromosome(Rng& rng) {
    Chromosome c;
    for (double& g : c.genes) g = rng.uniform(GENE_MIN, GENE_MAX);
    return c;
}

namespace {

void write_records(std::ostream& out, std::span<const StoredChromosome> records) {
    char buf[32];
    for (const auto& rec : records) {
        if (rec.id.empty() || rec.id.find_first_of("\t\n#") != std::string::npos)
            throw Error("store: record id must be non-empty and free of tabs/newlines/#");
        out << rec.id << '\t' << rec.generation << '\t';
        std::snprintf(buf, sizeof buf, "%.6f", rec.fitness);
        out << buf << '\t';
        for (int i = 0; i < CHROMOSOME_LENGTH; ++i) {
            std::snprintf(buf, sizeof buf, "%.6f", rec.genes.genes[static_cast<size_t>(i)]);
            if (i) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace

void save_store(const std::string& path, std::span<const StoredChromosome> records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("store: cannot open '" + path + "' for writing");
    write_records(out, records);
    if (!out) throw Error("store: write failed for '" + path + "'");
}

void append_store(const std::string& path, std::span<const StoredChromosome> records) {
    std::set<std::string> existing;
    if (std::filesystem::exists(path))
        for (const auto& rec : load_store(path)) existing.insert(rec.id);
    for (const auto& rec : records)
        if (!existing.insert(rec.id).second)
            throw Error("store: id '" + rec.id + "' already present in '" + path + "'");

    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("store: cannot open '" + path + "' for writing");
    write_records(out, records);
    if (!out) throw Error("store: write failed for '" + path + "'");
}

std::vector<StoredChromosome> load_store(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("store: cannot open '" + path + "'");

    std::vector<StoredChromosome> records;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "store '" + path + "' line " + std::to_string(line_no);

        std::vector<std::string> fields;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 4)
            throw Error(where + ": expected 4 tab-separated fields, got " +
                        std::to_string(fields.size()));

        StoredChromosome rec;
        rec.id = fields[0];
        if (rec.id.empty()) throw Error(where + ": empty id");
        if (!seen.insert(rec.id).second) throw Error(where + ": duplicate id '" + rec.id + "'");
        try {
            rec.generation = std::stoi(fields[1]);
            rec.fitness = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw Error(where + ": unparsable generation or fitness");
        }

        std::istringstream genes_in(fields[3]);
        std::vector<double> genes;
        genes.reserve(CHROMOSOME_LENGTH);
        std::string tok;
        while (genes_in >> tok) {
            try {
                size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                genes.push_back(v);
            } catch (const std::exception&) {
                throw Error(where + ": unparsable gene '" + tok + "'");
            }
        }
        if (genes.size() != CHROMOSOME_LENGTH)
            throw Error(where + ": expected " + std::to_string(CHROMOSOME_LENGTH) +
                        " genes, got " + std::to_string(genes.size()));
        if (!genes_in_bounds(genes))
            throw Error(where + ": gene outside [" + std::to_string(GENE_MIN) + ", " +
                        std::to_string(GENE_MAX) + "]");
        rec.genes = chromosome_from_span(genes);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace phoenix
