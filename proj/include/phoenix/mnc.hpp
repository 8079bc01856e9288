#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phoenix/chess.hpp"
#include "phoenix/rng.hpp"

namespace phoenix {

struct Individual {
    std::vector<double> genes;
    std::optional<double> fitness;  // unset until evaluated
    int birth_generation = 0;
};

struct GeneBounds {
    double lo = -100.0;
    double hi = 100.0;
};

struct MncParams {
    int population_size = 20;
    int cs = 3;          // crowding-selection candidates per mating
    int cf = 3;          // crowding factor groups per replacement
    int group_size = 3;  // individuals per crowding factor group
    double crossover_rate = 0.9;
    double mutation_rate = 0.05;   // per gene
    double mutation_sigma = 10.0;  // centipawns, 5% of the gene range
    int max_generations = 1000;
    int stale_best_generations = 10;
    int low_change_generations = 20;
    double low_change_threshold = 0.01;
    uint64_t rng_seed = 1;

    void validate() const;  // throws Error naming the offending field
};

enum class TerminationReason { MaxGenerations, StaleBest, LowChangeRate };

std::string to_string(TerminationReason r);

// L2 over raw gene values.
double phenotypic_distance(std::span<const double> a, std::span<const double> b);

// Most similar of cs candidates drawn uniformly with replacement, the
// individual itself excluded (self-draws are redrawn). Returns an index.
size_t crowding_select_mate(const std::vector<Individual>& population, size_t subject, int cs,
                            Rng& rng);

// Uniform crossover with the given probability, otherwise clones. Children
// always come back with fitness unset.
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, double rate,
                                            Rng& rng);

// Per-gene gaussian perturbation, clamped to bounds. Fitness is unset only
// if some gene actually changed.
Individual mutate(const Individual& ind, double rate, double sigma, GeneBounds bounds, Rng& rng);

// Worst-among-most-similar: cf groups of group_size distinct individuals
// (groups drawn independently, so they may overlap); the most similar member
// of each group is a candidate; the lowest-fitness candidate dies. An
// unevaluated candidate counts as lowest. Returns the replaced index.
size_t replace_worst_among_most_similar(std::vector<Individual>& population, Individual offspring,
                                        int cf, int group_size, Rng& rng);

// Assigns finite fitness to every individual. The seed is drawn from the run
// loop's generator so concurrent evaluators stay reproducible.
using FitnessEvaluator =
    std::function<void(std::vector<Individual>& population, int generation, uint64_t seed)>;

struct GenerationStats {
    int generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double best_change_norm = 0.0;  // relative L2 change of the best-so-far genes
    const std::vector<Individual>* population = nullptr;  // post-evaluation snapshot
};

using ProgressReporter = std::function<void(const GenerationStats&)>;

struct MncResult {
    std::vector<Individual> population;  // as of the last evaluation
    Individual best;                     // best-so-far by fitness, ties to the earlier one
    TerminationReason reason = TerminationReason::MaxGenerations;
    int generations = 0;
};

MncResult run_mnc(const MncParams& params, size_t gene_count, GeneBounds bounds,
                  const FitnessEvaluator& evaluate, const ProgressReporter& report = nullptr);

// 1-D benchmark functions for the optimizer demo; fitness is the negated
// objective, so minima of f are maxima of fitness.
struct Benchmark {
    std::string name;
    GeneBounds domain;
    std::function<double(double)> objective;
    std::vector<double> minima;
};

const std::vector<Benchmark>& benchmarks();
const Benchmark& find_benchmark(const std::string& name);  // throws Error listing names

}  // namespace phoenix
