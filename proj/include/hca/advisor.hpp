#pragma once

// Placement decisions: send a job to the cloud only when the predicted
// local turnaround exceeds the predicted cloud runtime and the wait-time
// variance is below the cutoff C(s) = alpha * exp(beta * s).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hca/cloud_model.hpp"

namespace hca {

struct AdvisorPrediction {
    double wait_estimate = 0;
    double wait_variance = 0;
    double run_estimate = 0;
    double run_variance = 0;

    void validate() const;
};

struct CutoffModel {
    double alpha = 1.0;
    double beta = 0.0;

    // alpha * exp(beta * s).
    double threshold(double speed) const;
    // variance < C(s), evaluated in log space so that C never under- or
    // overflows.
    bool trusts(double variance, double speed) const;
    void validate() const;
};

enum class Environment { local, cloud };

enum class VerdictReason { time_saving_and_confident, cutoff_exceeded, local_faster };

std::string_view to_string(Environment env);
std::string_view to_string(VerdictReason reason);

struct Verdict {
    Environment environment = Environment::local;
    VerdictReason reason = VerdictReason::local_faster;
    bool out_of_range = false;  // the cloud model cannot price this job

    bool operator==(const Verdict&) const = default;
};

// The raw time comparison only: w_p + r_p > r_cloud(j, r_p).
bool cloud_is_faster(const AdvisorPrediction& pred, std::int64_t procs, const CloudModel& cloud);

// Without a cutoff the confidence condition is dropped. Runtime variance is
// never consulted.
Verdict decide(const AdvisorPrediction& pred, std::int64_t procs, const CloudModel& cloud,
               const std::optional<CutoffModel>& cutoff);

// ---------------------------------------------------------------------------
// Fitting the cutoff

inline constexpr double kVarianceFloor = 1e-6;

struct CutoffSample {
    double speed = 0;
    double wait_variance = 0;
    bool hit = false;
};

struct CutoffFitOptions {
    // Ridge penalty on the standardized slopes; keeps separable data finite.
    double ridge = 1e-3;
    int max_iterations = 100;
    bool balance_classes = true;
};

// Fits a line log(sigma^2) = beta * s + log(alpha) separating hits (below)
// from misses (above) by class-balanced logistic regression on
// (s, log max(sigma^2, floor)). Throws ConfigError when only one class is
// present or when higher variance does not indicate misses.
CutoffModel fit_cutoff(std::span<const CutoffSample> samples, const CutoffFitOptions& options = {});

}  // namespace hca
