#include "phoenix/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "phoenix/rating.hpp"
#include "phoenix/search.hpp"
#include "phoenix/tournament.hpp"
#include "phoenix/uci.hpp"

namespace phoenix {

namespace {

std::string format_fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

Chromosome parse_chromosome_spec(const std::string& spec) {
    if (spec == "zero") return Chromosome{};
    if (spec == "random") {
        Rng rng(1);
        return random_chromosome(rng);
    }
    if (spec.rfind("random:", 0) == 0) {
        try {
            Rng rng(std::stoull(spec.substr(7)));
            return random_chromosome(rng);
        } catch (const std::exception&) {
            throw Error("chromosome spec '" + spec + "': seed must be an unsigned integer");
        }
    }
    if (spec.rfind("store:", 0) == 0) {
        const auto hash = spec.find('#');
        if (hash == std::string::npos || hash + 1 >= spec.size())
            throw Error("chromosome spec '" + spec + "': expected store:<path>#<id>");
        const std::string path = spec.substr(6, hash - 6);
        const std::string id = spec.substr(hash + 1);
        for (const auto& rec : load_store(path))
            if (rec.id == id) return rec.genes;
        throw Error("chromosome spec '" + spec + "': id '" + id + "' not found in '" + path + "'");
    }
    throw Error("chromosome spec '" + spec +
                "': expected zero, random, random:<seed> or store:<path>#<id>");
}

int cmd_train(const std::string& config_path, int jobs, std::ostream& out) {
    const TrainConfig config = TrainConfig::parse_file(config_path);
    config.validate();

    const auto openings = load_openings(config.openings);
    GameConfig game_config;
    game_config.limits = SearchLimits::depth(config.search_depth);

    std::vector<std::string> ids;
    for (int i = 0; i < config.mnc.population_size; ++i) ids.push_back("p" + std::to_string(i));
    const TournamentScheme scheme = config.scheme == "roundrobin"
                                        ? TournamentScheme::round_robin()
                                        : TournamentScheme::random_pairing(config.min_games);

    const FitnessEvaluator evaluator = [&](std::vector<Individual>& population, int generation,
                                           uint64_t seed) {
        std::vector<Chromosome> players;
        players.reserve(population.size());
        for (const auto& ind : population) players.push_back(chromosome_from_span(ind.genes));
        Rng tournament_rng(seed);
        const ScoreTable table = run_fitness_tournament(players, ids, scheme, game_config,
                                                        openings, tournament_rng, jobs);
        for (size_t i = 0; i < population.size(); ++i)
            population[i].fitness = table.points.at(ids[i]);
        (void)generation;
    };

    std::ofstream metrics(config.metrics_path, std::ios::trunc);
    if (!metrics) throw Error("train: cannot open metrics file '" + config.metrics_path + "'");
    metrics << "generation,best_fitness,mean_fitness,best_change_norm\n";
    const ProgressReporter reporter = [&](const GenerationStats& stats) {
        metrics << stats.generation << ',' << format_fixed(stats.best_fitness) << ','
                << format_fixed(stats.mean_fitness) << ','
                << format_fixed(stats.best_change_norm) << '\n';
        metrics.flush();
        out << "generation " << stats.generation << ": best " << format_fixed(stats.best_fitness)
            << ", mean " << format_fixed(stats.mean_fitness) << '\n';
    };

    const MncResult result = run_mnc(config.mnc, CHROMOSOME_LENGTH, {GENE_MIN, GENE_MAX},
                                     evaluator, reporter);

    std::vector<size_t> order(result.population.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return *result.population[a].fitness > *result.population[b].fitness;
    });
    const size_t keep = std::min<size_t>(static_cast<size_t>(config.top_k), order.size());
    std::vector<StoredChromosome> records;
    for (size_t rank = 0; rank < keep; ++rank) {
        const Individual& ind = result.population[order[rank]];
        StoredChromosome rec;
        rec.id = "s" + std::to_string(config.mnc.rng_seed) + "-g" +
                 std::to_string(result.generations) + "-r" + std::to_string(rank);
        rec.generation = ind.birth_generation;
        rec.fitness = *ind.fitness;
        rec.genes = chromosome_from_span(ind.genes);
        records.push_back(std::move(rec));
    }
    append_store(config.store_path, records);

    out << "terminated after " << result.generations << " generations: "
        << to_string(result.reason) << '\n';
    out << "stored " << records.size() << " chromosomes to " << config.store_path
        << " (best: " << records.front().id << ", fitness " << format_fixed(records.front().fitness)
        << ")\n";
    return 0;
}

int cmd_uci(const std::string& store_path, const std::string& chromosome_id) {
    return uci_loop(std::cin, std::cout, store_path, chromosome_id);
}

int cmd_match(const MatchArgs& args, std::ostream& out) {
    if (args.games < 1) throw Error("match: --games must be >= 1");
    if (args.depth.has_value() == args.movetime_ms.has_value())
        throw Error("match: exactly one of --depth and --movetime is required");

    const Chromosome white = parse_chromosome_spec(args.white_spec);
    const Chromosome black = parse_chromosome_spec(args.black_spec);
    GameConfig config;
    config.limits = args.depth ? SearchLimits::depth(*args.depth)
                               : SearchLimits::move_time(*args.movetime_ms);
    const auto openings = load_openings(args.openings);

    Rng rng(args.seed);
    const auto [score, records] =
        run_match(white, black, args.games, config, openings, args.pgn_path, rng, args.jobs,
                  args.white_spec, args.black_spec);

    int white_wins = 0, black_wins = 0, draws = 0;
    for (const auto& r : records) {
        const bool spec_white = r.white_id == args.white_spec;
        switch (r.result) {
            case GameOutcome::WhiteWin: (spec_white ? white_wins : black_wins)++; break;
            case GameOutcome::BlackWin: (spec_white ? black_wins : white_wins)++; break;
            case GameOutcome::Draw: draws++; break;
        }
    }
    const double fraction = score / args.games;
    out << args.white_spec << " vs " << args.black_spec << ": " << format_fixed(score) << " / "
        << args.games << " (+" << white_wins << " =" << draws << " -" << black_wins << ", "
        << format_fixed(fraction * 100.0) << "%)\n";
    out << "performance rating of " << args.white_spec << ": "
        << format_fixed(performance_rating(fraction, args.opponent_elo)) << " (vs opponent elo "
        << format_fixed(args.opponent_elo) << ")\n";
    if (!args.pgn_path.empty()) out << "pgn written to " << args.pgn_path << '\n';
    return 0;
}

int cmd_rate(const std::string& pgn_path, const std::string& subject, double opponent_elo,
             std::ostream& out) {
    const auto [summary, rating] = rate_from_pgn(pgn_path, subject, opponent_elo);
    out << subject << ": " << summary.total() << " games (+" << summary.wins << " ="
        << summary.draws << " -" << summary.losses << "), score "
        << format_fixed(score_fraction(summary) * 100.0) << "%, performance rating "
        << format_fixed(rating) << " vs " << format_fixed(opponent_elo) << '\n';
    return 0;
}

int cmd_perft(const std::string& fen, int depth, std::ostream& out) {
    if (depth < 0) throw Error("perft: depth must be >= 0");
    const Position pos = fen == "startpos" ? Position::startpos() : Position::from_fen(fen);
    out << perft(pos, depth) << '\n';
    return 0;
}

int cmd_mnc_demo(const std::string& function_name, int generations, uint64_t seed, int population,
                 const std::string& csv_path, std::ostream& out) {
    const Benchmark& bench = find_benchmark(function_name);
    if (generations < 0) throw Error("mnc-demo: --generations must be >= 0");

    const auto count_near = [&](const std::vector<Individual>& pop, double center,
                                double radius) {
        int n = 0;
        for (const auto& ind : pop)
            if (std::abs(ind.genes[0] - center) <= radius) ++n;
        return n;
    };
    const auto report_population = [&](const std::vector<Individual>& pop, int gens,
                                       const std::string& reason) {
        out << "benchmark " << bench.name << " on [" << bench.domain.lo << ", " << bench.domain.hi
            << "], population " << pop.size() << ", " << gens << " generations (" << reason
            << ")\n";
        int niches = 0;
        for (const double m : bench.minima) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& ind : pop) nearest = std::min(nearest, std::abs(ind.genes[0] - m));
            const int close = count_near(pop, m, 0.3);
            if (close >= 2) ++niches;
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "minimum x=%+.6f: %d individuals within 0.3, %d within 0.05, nearest "
                          "|dx|=%.6f\n",
                          m, close, count_near(pop, m, 0.05), nearest);
            out << buf;
        }
        out << "niches occupied: " << niches << " of " << bench.minima.size() << '\n';
    };

    if (generations == 0) {  // report the raw random initial population
        Rng rng(seed);
        std::vector<Individual> pop(static_cast<size_t>(population));
        for (auto& ind : pop) {
            ind.genes = {rng.uniform(bench.domain.lo, bench.domain.hi)};
            ind.fitness = -bench.objective(ind.genes[0]);
        }
        report_population(pop, 0, "initial population");
        return 0;
    }

    MncParams params;
    params.population_size = population;
    params.mutation_rate = 0.9;
    params.mutation_sigma = 0.05 * (bench.domain.hi - bench.domain.lo);
    params.max_generations = generations;
    params.stale_best_generations = generations;  // let the demo run its full course
    params.low_change_generations = generations;
    params.rng_seed = seed;

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path, std::ios::trunc);
        if (!csv) throw Error("mnc-demo: cannot open csv file '" + csv_path + "'");
        csv << "generation,best_fitness,mean_fitness,best_change_norm,niche_count\n";
    }
    const ProgressReporter reporter = [&](const GenerationStats& stats) {
        if (!csv.is_open()) return;
        int niches = 0;
        for (const double m : bench.minima)
            if (count_near(*stats.population, m, 0.3) >= 2) ++niches;
        csv << stats.generation << ',' << format_fixed(stats.best_fitness) << ','
            << format_fixed(stats.mean_fitness) << ',' << format_fixed(stats.best_change_norm)
            << ',' << niches << '\n';
    };

    const FitnessEvaluator evaluator = [&](std::vector<Individual>& pop, int, uint64_t) {
        for (auto& ind : pop)
            if (!ind.fitness) ind.fitness = -bench.objective(ind.genes[0]);
    };
    const MncResult result =
        run_mnc(params, 1, bench.domain, evaluator, csv_path.empty() ? nullptr : reporter);
    report_population(result.population, result.generations, to_string(result.reason));
    return 0;
}

}  // namespace phoenix
