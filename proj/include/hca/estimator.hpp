#pragma once

// Instance-based (k nearest neighbours) regression with a weighted
// heterogeneous distance, a Gaussian kernel, and a weighted-variance
// uncertainty estimate.

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hca/features.hpp"

namespace hca {

using FeatureWeights = std::array<double, kFeatureCount>;

struct EstimatorParams {
    std::size_t k = 16;
    double omega = 0.25;  // kernel width
    std::size_t window_size = 10000;
    FeatureWeights feature_weights{};  // 0 disables a feature

    // Throws ConfigError when k < 1, omega <= 0, window_size < k, a weight
    // is negative or non-finite, or no weight is positive.
    void validate() const;

    bool operator==(const EstimatorParams&) const = default;
};

// Weights restricted to a schema: inactive features get 0.
FeatureWeights masked_weights(const FeatureWeights& weights, const FeatureSchema& schema);

// sqrt(sum_f (w_f * delta_f)^2). delta_f is the absolute difference of the
// range-normalized values for numeric features and the overlap (0 equal,
// 1 different) for categorical ones. A dimension missing on either side is
// left out of the sum.
double distance(const FeatureVector& q, const FeatureVector& x, const FeatureWeights& weights,
                const NormalizationTable& norm);

// exp(-(d / omega)^2).
double kernel(double d, double omega);

// Normalized kernel weights written so that no quotient can be 0/0:
// v_p = 1 / sum_r exp((d_p/omega)^2 - (d_r/omega)^2). The r = p term is
// exactly 1, so the denominator is at least 1.
std::vector<double> stable_weights(std::span<const double> distances, double omega);

// Unbiased weighted variance of labels around `estimate`:
// (sum v^2 / (1 - sum v^2)) * sum v (estimate - label)^2, defined as 0 when
// 1 - sum v^2 < kVarianceGuard.
inline constexpr double kVarianceGuard = 1e-12;
double weighted_variance(std::span<const double> weights, std::span<const double> labels, double estimate);

struct Example {
    FeatureVector features;
    double label = 0;
    std::int64_t id = 0;  // job id, for audit
};

// Bounded FIFO window of labelled examples with running min/max of every
// numeric feature. Single writer; reads are safe between inserts.
class KnowledgeBase {
public:
    explicit KnowledgeBase(std::size_t window_size);

    // Appends and evicts the oldest entry past the window. Throws InputError
    // for a negative or non-finite label.
    void insert(const FeatureVector& features, double label, std::int64_t id = 0);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t window_size() const { return window_; }

    // Oldest first.
    const Example& example(std::size_t i) const { return entries_[i].example; }
    std::uint64_t sequence(std::size_t i) const { return entries_[i].seq; }
    const NormalizationTable& normalization() const { return table_; }

    // Line-delimited checkpoint: a schema header line, then one example per
    // line. load() restores insertion sequence numbers, so predictions are
    // reproduced exactly.
    void save(std::ostream& out) const;
    static KnowledgeBase load(std::istream& in);

private:
    struct Entry {
        Example example;
        std::uint64_t seq = 0;
    };
    using Extremes = std::deque<std::pair<double, std::uint64_t>>;

    void push(Example example, std::uint64_t seq);
    void refresh_range(std::size_t f);

    std::size_t window_;
    std::uint64_t next_seq_ = 0;
    std::deque<Entry> entries_;
    std::array<Extremes, kFeatureCount> mins_;
    std::array<Extremes, kFeatureCount> maxs_;
    NormalizationTable table_;
};

struct Neighbor {
    std::size_t position = 0;  // index into the knowledge base, oldest first
    std::int64_t id = 0;
    double distance = 0;
    double label = 0;
    double weight = 0;
};

struct Prediction {
    double estimate = 0;
    double variance = 0;
    std::size_t neighbor_count = 0;
    std::vector<std::int64_t> neighbor_ids;
    std::vector<Neighbor> neighbors;  // nearest first
};

// The min(k, size) nearest examples; ties at equal distance go to the most
// recently inserted.
std::vector<Neighbor> nearest_neighbors(const FeatureVector& q, const KnowledgeBase& kb,
                                        const EstimatorParams& params);

// Kernel-weighted estimate and variance over already selected neighbours.
// Fills each neighbour's weight.
Prediction combine_neighbors(std::vector<Neighbor> neighbors, double omega);

// Throws InputError("no training data") on an empty knowledge base.
Prediction predict(const FeatureVector& q, const KnowledgeBase& kb, const EstimatorParams& params);

}  // namespace hca
