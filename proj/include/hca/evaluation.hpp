#pragma once

// Replay harness. Stage one streams jobs through the wait and run
// estimators in time order, inserting each label only once it would have
// been known. Stage two turns the predictions into placement decisions for
// any number of cloud models and scores them against the log's actuals.
//
// Placement never feeds back into the local trace, so stage one runs once
// and its output is shared by every cloud model and mode.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hca/advisor.hpp"
#include "hca/estimator.hpp"

namespace hca {

struct ReplayJob {
    std::int64_t job_id = 0;
    std::int64_t submit = 0;
    std::int64_t wait = 0;  // actual wait, from the log
    std::int64_t run = 0;   // actual local run time, from the log
    std::int64_t procs = 0;
    FeatureVector features;
    bool query = false;  // predict and decide for this job
};

struct ReplayPrediction {
    std::int64_t job_id = 0;
    std::size_t index = 0;  // position in the replay input
    std::int64_t submit = 0;
    std::int64_t procs = 0;
    AdvisorPrediction prediction;
    double actual_wait = 0;
    double actual_run = 0;
    std::size_t wait_kb_size = 0;
    std::size_t run_kb_size = 0;
};

struct ReplayAudit {
    std::size_t predictions = 0;
    std::size_t wait_inserts = 0;
    std::size_t run_inserts = 0;
    // Largest label time present in either knowledge base at any prediction,
    // minus the prediction time. Never positive.
    std::int64_t worst_label_lead = std::numeric_limits<std::int64_t>::min();
};

struct ReplayResult {
    std::vector<ReplayPrediction> predictions;  // query jobs, in input order
    ReplayAudit audit;
};

// `jobs` must be sorted by submit time. Wait labels become available at
// submit + wait and run labels at submit + wait + run; at equal timestamps
// predictions happen first. Throws InvariantViolation if a label would be
// inserted before its own job was predicted or a prediction would see a
// future label, and InputError if a query finds an empty knowledge base.
ReplayResult replay_predictions(std::span<const ReplayJob> jobs, const EstimatorParams& wait_params,
                                const EstimatorParams& run_params);

// ---------------------------------------------------------------------------
// Decisions

enum class CutoffMode { without_cutoff, with_cutoff };
std::string_view to_string(CutoffMode mode);

struct DecisionRecord {
    std::int64_t job_id = 0;
    AdvisorPrediction prediction;
    double speed = 0;  // NaN when the cloud model cannot price the job
    Verdict verdict;
    double actual_wait = 0;
    double actual_local_run = 0;
    double actual_cloud_run = 0;  // NaN when out of range
    double saved_time = 0;
    bool predicted_cloud_faster = false;  // the raw comparison, no cutoff
};

// (r_local + w_a) - r_cloud for a cloud verdict, else 0.
// `scale` multiplies the difference and defaults to 1.
double saved_time(const DecisionRecord& record, double scale = 1.0);

std::vector<DecisionRecord> decide_all(std::span<const ReplayPrediction> predictions, const CloudModel& cloud,
                                       const std::optional<CutoffModel>& cutoff, CutoffMode mode);

struct AllocationSummary {
    std::size_t on_premise = 0;
    std::size_t on_cloud = 0;
    double saved_time = 0;  // seconds

    bool operator==(const AllocationSummary&) const = default;
};

// Jobs the cloud model cannot price are left out of the counts.
AllocationSummary summarize(std::span<const DecisionRecord> records);

// Clairvoyant baseline: cloud iff r_local + w_a > r_cloud from actuals.
AllocationSummary optimal_allocation(std::span<const ReplayPrediction> predictions, const CloudModel& cloud);

struct HitMiss {
    std::size_t hits = 0;
    std::size_t misses = 0;

    bool operator==(const HitMiss&) const = default;
};

// Compares the raw predicted comparison with the realized one; realized ties
// favor local. Out-of-range records are skipped.
HitMiss hit_miss(std::span<const DecisionRecord> records);

enum class Target { wait, run };
std::string_view to_string(Target target);
double rmse_report(std::span<const ReplayPrediction> predictions, Target target);

// ---------------------------------------------------------------------------
// Reports

struct ScenarioReport {
    std::string label;                 // overhead factor or scenario id
    std::optional<double> factor;      // set for linear models
    std::size_t excluded = 0;          // jobs outside the model's range
    AllocationSummary without_cutoff;
    AllocationSummary with_cutoff;     // equals without_cutoff when no cutoff is configured
    AllocationSummary optimal;
    HitMiss hits;
};

struct EvaluationReport {
    std::size_t test_jobs = 0;
    double wait_rmse = 0;
    double run_rmse = 0;
    bool cutoff_enabled = false;
    std::vector<ScenarioReport> rows;  // one per cloud model, in input order
};

struct LabeledCloudModel {
    std::string label;
    CloudModel model;
};

// Linear models for each overhead factor, labelled by the factor.
std::vector<LabeledCloudModel> linear_models(std::span<const double> factors, double provisioning_seconds = 0);
std::vector<LabeledCloudModel> empirical_models(std::span<const EmpiricalRatioModel> tables,
                                                double provisioning_seconds = 0);

// Optional per-record sink for audit output, called per model in input order.
struct DecisionSink {
    virtual ~DecisionSink() = default;
    virtual void consume(const LabeledCloudModel& model, CutoffMode mode, std::span<const DecisionRecord> records) = 0;
};

EvaluationReport evaluate(std::span<const ReplayPrediction> predictions, std::span<const LabeledCloudModel> models,
                          const std::optional<CutoffModel>& cutoff, unsigned workers = 1,
                          DecisionSink* sink = nullptr);

// Tab-separated tables. Saved times are printed in millions of seconds.
void write_allocation_table(std::ostream& out, const EvaluationReport& report);
void write_scenario_listing(std::ostream& out, const EvaluationReport& report);
void write_decision_audit(std::ostream& out, const LabeledCloudModel& model, CutoffMode mode,
                          std::span<const DecisionRecord> records);

}  // namespace hca
