#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "phoenix/genome.hpp"

using namespace phoenix;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("flatten keeps the fixed table order") {
    PvtSet pvt;
    const Chromosome zeros = flatten(pvt);
    for (const double g : zeros.genes) CHECK(g == 0.0);

    pvt.tables[static_cast<size_t>(PvtTable::PawnMg)][0] = 7.0;
    const Chromosome c = flatten(pvt);
    CHECK(c.genes[0] == 7.0);
    for (size_t i = 1; i < c.genes.size(); ++i) CHECK(c.genes[i] == 0.0);

    PvtSet king_eg;
    king_eg.tables[static_cast<size_t>(PvtTable::KingEg)][63] = -3.5;
    CHECK(flatten(king_eg).genes[639] == -3.5);
}

TEST_CASE("flatten and unflatten are mutual inverses") {
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const Chromosome c = random_chromosome(rng);
        CHECK(flatten(unflatten(c)) == c);
        const PvtSet pvt = unflatten(c);
        CHECK(unflatten(flatten(pvt)) == pvt);
    }
}

TEST_CASE("unflatten rejects wrong lengths") {
    const std::vector<double> short_genes(639, 0.0);
    CHECK_THROWS_AS(unflatten(short_genes), Error);
    const std::vector<double> long_genes(641, 0.0);
    CHECK_THROWS_AS(chromosome_from_span(long_genes), Error);
    const std::vector<double> ok(640, 0.0);
    CHECK(unflatten(ok) == PvtSet{});
}

TEST_CASE("endgame rook and queen fall back to middle-game tables") {
    PvtSet pvt;
    pvt.tables[static_cast<size_t>(PvtTable::RookMg)][10] = 4.0;
    pvt.tables[static_cast<size_t>(PvtTable::QueenMg)][11] = 5.0;
    CHECK(pvt.value(PieceKind::Rook, GamePhase::EndGame, 10) == 4.0);
    CHECK(pvt.value(PieceKind::Queen, GamePhase::EndGame, 11) == 5.0);
    CHECK(pvt.value(PieceKind::Pawn, GamePhase::EndGame, 10) == 0.0);
    CHECK(pvt_table_for(PieceKind::King, GamePhase::EndGame) == PvtTable::KingEg);
}

TEST_CASE("random_chromosome is deterministic per seed") {
    Rng a(123), b(123), c(124);
    const Chromosome first = random_chromosome(a);
    CHECK(first == random_chromosome(b));

    const Chromosome other = random_chromosome(c);
    int differing = 0;
    for (size_t i = 0; i < first.genes.size(); ++i)
        if (first.genes[i] != other.genes[i]) ++differing;
    CHECK(differing >= 600);
}

TEST_CASE("random_chromosome samples uniformly within bounds") {
    Rng rng(77);
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < 16; ++i) {  // > 10^4 genes
        const Chromosome c = random_chromosome(rng);
        CHECK(genes_in_bounds(c.genes));
        for (const double g : c.genes) sum += g;
        count += CHROMOSOME_LENGTH;
    }
    CHECK(std::abs(sum / count) < 2.0);
}

TEST_CASE("store round trips records") {
    const std::string path = temp_path("phoenix_test_store.pvt");
    std::filesystem::remove(path);

    save_store(path, {});
    CHECK(load_store(path).empty());

    Rng rng(5);
    std::vector<StoredChromosome> records;
    records.push_back({"alpha", 3, 2.5, random_chromosome(rng)});
    records.push_back({"beta", 7, -0.125, random_chromosome(rng)});
    save_store(path, records);

    const auto loaded = load_store(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].id == "alpha");
    CHECK(loaded[0].generation == 3);
    CHECK(loaded[0].fitness == doctest::Approx(2.5).epsilon(1e-9));
    for (size_t i = 0; i < CHROMOSOME_LENGTH; ++i)
        CHECK(std::abs(loaded[0].genes.genes[i] - records[0].genes.genes[i]) < 5e-7);
    CHECK(loaded[1].id == "beta");
    std::filesystem::remove(path);
}

TEST_CASE("store supports comments and reports bad lines") {
    const std::string path = temp_path("phoenix_test_store_bad.pvt");
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "short\t1\t0.5\t1.0 2.0\n";
    }
    CHECK_THROWS_WITH_AS(load_store(path), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(load_store(path), doctest::Contains("expected 640 genes"), Error);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_store(temp_path("phoenix_no_such_store.pvt")), Error);
}

TEST_CASE("store rejects duplicate ids and append collisions") {
    const std::string path = temp_path("phoenix_test_store_dup.pvt");
    std::filesystem::remove(path);
    std::vector<StoredChromosome> records;
    records.push_back({"one", 1, 0.0, Chromosome{}});
    save_store(path, records);
    CHECK_THROWS_WITH_AS(append_store(path, records), doctest::Contains("already present"), Error);
    records[0].id = "two";
    append_store(path, records);
    CHECK(load_store(path).size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("store preserves six decimal places") {
    const std::string path = temp_path("phoenix_test_store_precision.pvt");
    StoredChromosome rec{"precise", 0, 1.2345678, Chromosome{}};
    rec.genes.genes[0] = 99.9999994;
    rec.genes.genes[1] = -99.9999994;
    rec.genes.genes[2] = 0.0000004;
    save_store(path, {&rec, 1});
    const auto loaded = load_store(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0].genes.genes[0] == doctest::Approx(rec.genes.genes[0]).epsilon(1e-8));
    CHECK(loaded[0].genes.genes[1] == doctest::Approx(rec.genes.genes[1]).epsilon(1e-8));
    CHECK(std::abs(loaded[0].genes.genes[2]) < 1e-6);
    std::filesystem::remove(path);
}
