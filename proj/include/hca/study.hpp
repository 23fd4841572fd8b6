#pragma once

// Glue between an augmented trace and the tuning and replay stages:
// partitioning, feature extraction, example sets and cutoff training data.

#include <cstddef>
#include <span>
#include <vector>

#include "hca/evaluation.hpp"
#include "hca/simkernel.hpp"
#include "hca/tuning.hpp"

namespace hca {

struct StudyData {
    TraceHeader header;
    StudyPartition partition;
    FeatureSchema schema;  // features extracted for every job
    std::vector<ReplayJob> tune;
    std::vector<ReplayJob> train;
    std::vector<ReplayJob> test;  // query flag set
    std::size_t dropped_unknown_wait = 0;
    std::size_t dropped_missing_feature = 0;  // e.g. no promise for an unschedulable job
};

// Partitions the trace and extracts `schema` features for every admitted job
// with a known wait. Throws ConfigError when the trace is too short.
StudyData build_study(const AugmentedTrace& trace, const StudyCounts& counts, const FeatureSchema& schema);

std::vector<Example> examples(std::span<const ReplayJob> jobs, Target target);

// Training fill followed by the test slice, ready for replay_predictions.
std::vector<ReplayJob> replay_stream(const StudyData& study);

// Predictions for `queries` from fixed knowledge bases holding the most
// recent window of `history`. Used on the tuning slice.
std::vector<ReplayPrediction> static_predictions(std::span<const ReplayJob> history,
                                                 std::span<const ReplayJob> queries,
                                                 const EstimatorParams& wait_params,
                                                 const EstimatorParams& run_params);

enum class TuneMethod { correlation, ga };

struct TuneResult {
    EstimatorParams params;
    double validation_rmse = 0;
    std::vector<GenerationStats> trace;  // empty for the correlation method
};

// correlation: weights from correlation_weights, k/omega/window from `base`.
// ga: full genetic search seeded by `ga.seed`; `ga.schema` is replaced by
// `schema`.
TuneResult tune_estimator(std::span<const Example> train, std::span<const Example> validate,
                          const FeatureSchema& schema, TuneMethod method, const EstimatorParams& base,
                          GaOptions ga = {});

// One sample per (prediction, in-range model): speed ratio, wait variance and
// whether the raw comparison matched the realized one.
std::vector<CutoffSample> cutoff_samples(std::span<const ReplayPrediction> predictions,
                                         std::span<const LabeledCloudModel> models);

}  // namespace hca
