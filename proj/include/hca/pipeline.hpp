#pragma once

// End-to-end steps shared by the command-line tool and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "hca/config.hpp"
#include "hca/study.hpp"

namespace hca {

// Reads the augmented trace named in the configuration and prepares the
// study with the union of the wait and run feature sets.
StudyData load_study(const RunConfig& config);
StudyData prepare_study(const AugmentedTrace& trace, const RunConfig& config);

// Tunes (or, for the fixed method, validates) parameters for one target:
// training fill as knowledge base, tuning slice for validation.
TuneResult tune_target(const StudyData& study, const RunConfig& config, Target target);

std::vector<LabeledCloudModel> cloud_models(const RunConfig& config);

struct CutoffChoice {
    std::optional<CutoffModel> model;
    std::string source;  // fit, fixed, fallback or disabled
    std::string note;    // why a fit was not used, if it was not
    std::size_t samples = 0;
    std::size_t hits = 0;
    std::size_t misses = 0;
};

// Fits on the tuning slice, predicted from the training fill, pooling samples
// over every cloud model. Falls back to the fixed cutoff when the fit is
// impossible and the configuration allows it.
CutoffChoice choose_cutoff(const RunConfig& config, const StudyData& study, const EstimatorParams& wait,
                           const EstimatorParams& run, const std::vector<LabeledCloudModel>& models);

struct EvaluationRun {
    EvaluationReport report;
    ReplayAudit audit;
};

EvaluationRun run_evaluation(const StudyData& study, const EstimatorParams& wait, const EstimatorParams& run,
                             const std::vector<LabeledCloudModel>& models, const std::optional<CutoffModel>& cutoff,
                             unsigned workers, DecisionSink* sink = nullptr);

Json to_json(const CutoffChoice& choice);
Json to_json(const EvaluationReport& report);
Json to_json(const ReplayAudit& audit);
Json study_summary(const StudyData& study);

}  // namespace hca
