#include "phoenix/mnc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace phoenix {

void MncParams::validate() const {
    if (population_size < 4) throw Error("mnc: population_size must be >= 4");
    const auto in_pop = [&](int v, const char* name) {
        if (v < 1 || v > population_size)
            throw Error(std::string("mnc: ") + name + " must be in [1, population_size]");
    };
    in_pop(cs, "cs");
    in_pop(cf, "cf");
    in_pop(group_size, "group_size");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw Error("mnc: crossover_rate must be in [0, 1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw Error("mnc: mutation_rate must be in [0, 1]");
    if (mutation_sigma < 0.0) throw Error("mnc: mutation_sigma must be >= 0");
    if (max_generations < 1) throw Error("mnc: max_generations must be >= 1");
    if (stale_best_generations < 1) throw Error("mnc: stale_best_generations must be >= 1");
    if (low_change_generations < 1) throw Error("mnc: low_change_generations must be >= 1");
    if (low_change_threshold < 0.0) throw Error("mnc: low_change_threshold must be >= 0");
}

std::string to_string(TerminationReason r) {
    switch (r) {
        case TerminationReason::MaxGenerations: return "max generations reached";
        case TerminationReason::StaleBest: return "best solution unchanged";
        case TerminationReason::LowChangeRate: return "best solution change rate below threshold";
    }
    return "unknown";
}

double phenotypic_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error("phenotypic distance: gene vectors of lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

size_t crowding_select_mate(const std::vector<Individual>& population, size_t subject, int cs,
                            Rng& rng) {
    if (population.size() < 2) throw Error("crowding selection needs a population of >= 2");
    size_t best = subject;
    double best_distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cs; ++i) {
        size_t candidate = subject;
        while (candidate == subject) candidate = rng.index(population.size());
        const double d =
            phenotypic_distance(population[candidate].genes, population[subject].genes);
        if (d < best_distance) {  // ties keep the first-sampled candidate
            best_distance = d;
            best = candidate;
        }
    }
    return best;
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, double rate,
                                            Rng& rng) {
    if (a.genes.size() != b.genes.size())
        throw Error("crossover: parents have different gene counts");
    Individual c1{a.genes, std::nullopt, a.birth_generation};
    Individual c2{b.genes, std::nullopt, b.birth_generation};
    if (rng.chance(rate)) {
        for (size_t i = 0; i < c1.genes.size(); ++i)
            if (rng.chance(0.5)) std::swap(c1.genes[i], c2.genes[i]);
    }
    return {std::move(c1), std::move(c2)};
}

Individual mutate(const Individual& ind, double rate, double sigma, GeneBounds bounds, Rng& rng) {
    Individual out = ind;
    bool changed = false;
    for (double& g : out.genes) {
        if (!rng.chance(rate)) continue;
        const double next = std::clamp(g + rng.gaussian(0.0, sigma), bounds.lo, bounds.hi);
        if (next != g) changed = true;
        g = next;
    }
    if (changed) out.fitness.reset();
    return out;
}

namespace {

// Unevaluated individuals (this generation's newborns) lose fitness
// comparisons against any evaluated incumbent.
double fitness_or_lowest(const Individual& ind) {
    return ind.fitness.value_or(-std::numeric_limits<double>::infinity());
}

// group_size distinct indices via partial Fisher-Yates.
void sample_group(std::vector<size_t>& scratch, size_t group_size, Rng& rng,
                  std::vector<size_t>& out) {
    out.clear();
    std::iota(scratch.begin(), scratch.end(), size_t{0});
    for (size_t i = 0; i < group_size; ++i) {
        const size_t j = i + rng.index(scratch.size() - i);
        std::swap(scratch[i], scratch[j]);
        out.push_back(scratch[i]);
    }
}

}  // namespace

size_t replace_worst_among_most_similar(std::vector<Individual>& population, Individual offspring,
                                        int cf, int group_size, Rng& rng) {
    if (group_size < 1 || static_cast<size_t>(group_size) > population.size())
        throw Error("replacement: group_size must be in [1, population size]");

    std::vector<size_t> scratch(population.size());
    std::vector<size_t> group;
    size_t victim = population.size();
    double victim_fitness = std::numeric_limits<double>::infinity();
    for (int g = 0; g < cf; ++g) {
        sample_group(scratch, static_cast<size_t>(group_size), rng, group);
        size_t closest = group[0];
        double closest_distance = std::numeric_limits<double>::infinity();
        for (const size_t idx : group) {
            const double d = phenotypic_distance(population[idx].genes, offspring.genes);
            if (d < closest_distance) {
                closest_distance = d;
                closest = idx;
            }
        }
        const double f = fitness_or_lowest(population[closest]);
        if (victim == population.size() || f < victim_fitness) {
            victim = closest;
            victim_fitness = f;
        }
    }
    population[victim] = std::move(offspring);
    return victim;
}

namespace {

void check_evaluated(const std::vector<Individual>& population, int generation) {
    for (size_t i = 0; i < population.size(); ++i) {
        const auto& ind = population[i];
        if (!ind.fitness || !std::isfinite(*ind.fitness))
            throw Error("mnc: evaluator left individual " + std::to_string(i) +
                        " without finite fitness in generation " + std::to_string(generation));
    }
}

size_t best_index(const std::vector<Individual>& population) {
    size_t best = 0;
    for (size_t i = 1; i < population.size(); ++i)
        if (*population[i].fitness > *population[best].fitness) best = i;
    return best;
}

}  // namespace

MncResult run_mnc(const MncParams& params, size_t gene_count, GeneBounds bounds,
                  const FitnessEvaluator& evaluate, const ProgressReporter& report) {
    params.validate();
    if (bounds.lo >= bounds.hi) throw Error("mnc: gene bounds must satisfy lo < hi");

    Rng rng(params.rng_seed);
    std::vector<Individual> population(static_cast<size_t>(params.population_size));
    for (auto& ind : population) {
        ind.genes.resize(gene_count);
        for (double& g : ind.genes) g = rng.uniform(bounds.lo, bounds.hi);
    }

    Individual best;
    int best_genes_since = 1;  // generation whose evaluation set the current best genes
    int low_change_streak = 0;

    for (int generation = 1;; ++generation) {
        const uint64_t eval_seed = rng.next_u64();
        try {
            evaluate(population, generation, eval_seed);
        } catch (const std::exception& e) {
            throw Error("mnc: evaluator failed in generation " + std::to_string(generation) +
                        ": " + e.what());
        }
        check_evaluated(population, generation);

        double change_norm = 0.0;
        const size_t top = best_index(population);
        if (best.genes.empty()) {
            best = population[top];
            best_genes_since = generation;
        } else if (*population[top].fitness > *best.fitness) {
            double norm_prev = 0.0;
            for (const double g : best.genes) norm_prev += g * g;
            change_norm = phenotypic_distance(population[top].genes, best.genes) /
                          (std::sqrt(norm_prev) + 1e-9);
            if (population[top].genes != best.genes) best_genes_since = generation;
            best = population[top];
        }
        if (generation > 1) low_change_streak =
            change_norm < params.low_change_threshold ? low_change_streak + 1 : 0;

        if (report) {
            GenerationStats stats;
            stats.generation = generation;
            stats.best_fitness = *best.fitness;
            stats.mean_fitness = 0.0;
            for (const auto& ind : population) stats.mean_fitness += *ind.fitness;
            stats.mean_fitness /= static_cast<double>(population.size());
            stats.best_change_norm = change_norm;
            stats.population = &population;
            report(stats);
        }

        if (generation - best_genes_since + 1 >= params.stale_best_generations)
            return {population, best, TerminationReason::StaleBest, generation};
        if (low_change_streak >= params.low_change_generations)
            return {population, best, TerminationReason::LowChangeRate, generation};
        if (generation == params.max_generations)
            return {population, best, TerminationReason::MaxGenerations, generation};

        // Breed: every index mates in turn, two offspring per pairing, each
        // inserted immediately.
        for (size_t a = 0; a < population.size(); ++a) {
            const size_t mate = crowding_select_mate(population, a, params.cs, rng);
            auto [c1, c2] = crossover(population[a], population[mate], params.crossover_rate, rng);
            for (Individual* child : {&c1, &c2}) {
                Individual mutated = mutate(*child, params.mutation_rate, params.mutation_sigma,
                                            bounds, rng);
                mutated.fitness.reset();  // newborns are scored by the next tournament
                mutated.birth_generation = generation;
                for (const double g : mutated.genes)
                    if (!(g >= bounds.lo && g <= bounds.hi))
                        throw Error("mnc: gene escaped bounds after operators");
                replace_worst_among_most_similar(population, std::move(mutated), params.cf,
                                                 params.group_size, rng);
            }
        }
    }
}

const std::vector<Benchmark>& benchmarks() {
    static const std::vector<Benchmark> all = [] {
        std::vector<Benchmark> v;
        const double m = std::sqrt(3.0 * 3.141592653589793238462643383279502884 / 2.0);
        v.push_back({"sinx2",
                     {-3.0, 3.0},
                     [](double x) { return std::sin(x * x); },
                     {-m, m}});
        return v;
    }();
    return all;
}

const Benchmark& find_benchmark(const std::string& name) {
    for (const auto& b : benchmarks())
        if (b.name == name) return b;
    std::string known;
    for (const auto& b : benchmarks()) {
        if (!known.empty()) known += ", ";
        known += b.name;
    }
    throw Error("unknown benchmark '" + name + "'; available: " + known);
}

}  // namespace phoenix
