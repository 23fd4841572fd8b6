#pragma once

// Fitting estimator parameters: validation RMSE, a seeded genetic search
// over (k, omega, window, weights), correlation-derived weights, and
// exhaustive feature subset search.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hca/estimator.hpp"

namespace hca {

// sqrt(mean((predicted - actual)^2)). Throws InputError on empty or
// mismatched input.
double rmse(std::span<const double> predicted, std::span<const double> actual);

// Builds a knowledge base from the most recent params.window_size training
// examples and scores predictions on every validation example.
// Throws InputError when either set is empty and ConfigError for invalid
// params.
double fitness(const EstimatorParams& params, std::span<const Example> train, std::span<const Example> validate);

// |Pearson| for numeric features, the correlation ratio for categorical
// ones, 0 for constant features, features inactive in the schema, and
// features with fewer than two present values. No rescaling.
// Throws InputError when train has fewer than two examples.
FeatureWeights correlation_weights(std::span<const Example> train, const FeatureSchema& schema);

// ---------------------------------------------------------------------------
// Genetic search

struct Chromosome {
    std::size_t k = 16;
    double omega = 0.25;
    std::size_t window_size = 10000;
    FeatureWeights feature_weights{};

    EstimatorParams decode() const { return EstimatorParams{k, omega, window_size, feature_weights}; }
    bool operator==(const Chromosome&) const = default;
};

struct GeneBounds {
    std::size_t k_min = 6;
    std::size_t k_max = 33;
    double omega_min = 0.005;
    double omega_max = 5.0;
    std::size_t window_min = 100;
    std::size_t window_max = 10000;

    // Default bounds for a training set of size n: window in [min(100, n), n]
    // and k no larger than n.
    static GeneBounds for_training_size(std::size_t n);
    bool contains(const Chromosome& c, const FeatureSchema& schema) const;
};

struct GaOptions {
    std::size_t population = 50;
    std::size_t generations = 100;  // the initial population is generation 1
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    double elitism = 0.05;  // share of the population, rounded up
    std::uint64_t seed = 1;
    FeatureSchema schema = FeatureSchema::all();
    // Derived from the training size when left unset.
    bool explicit_bounds = false;
    GeneBounds bounds;
    // Seeds the first generation; missing individuals are drawn at random.
    std::vector<Chromosome> initial_population;
    unsigned workers = 1;

    std::size_t elite_count() const;
    void validate() const;
};

struct GenerationStats {
    std::size_t generation = 0;  // 1-based
    double best = 0;
    double mean = 0;
};

struct GaResult {
    Chromosome best;
    double best_fitness = 0;
    std::vector<GenerationStats> trace;
    std::size_t evaluations = 0;
};

GaResult ga_optimize(std::span<const Example> train, std::span<const Example> validate, const GaOptions& options);

// ---------------------------------------------------------------------------
// Best subset selection

struct SubsetResult {
    FeatureMask subset;
    FeatureWeights weights{};
    double rmse = 0;
};

struct SubsetSearch {
    std::vector<SubsetResult> best_per_size;  // index i holds size i + 1
    SubsetResult global_best;
    std::size_t models_evaluated = 0;
};

// Evaluates every non-empty subset of the active features of `pool` with
// correlation weights and the k, omega and window of `base`. Within a size
// the first subset in enumeration order wins ties; the global best prefers
// fewer features on ties.
SubsetSearch best_subset(std::span<const Example> train, std::span<const Example> validate, const FeatureSchema& pool,
                         const EstimatorParams& base, unsigned workers = 1);

}  // namespace hca
