#pragma once

// Run configuration: one JSON file plus command-line overrides. Reports embed
// the resolved configuration so every table can be regenerated.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hca/advisor.hpp"
#include "hca/estimator.hpp"
#include "hca/swf.hpp"
#include "hca/tuning.hpp"

namespace hca {

using Json = nlohmann::ordered_json;

enum class EstimatorMethod { correlation, ga, fixed };

struct EstimatorSettings {
    EstimatorMethod method = EstimatorMethod::correlation;
    EstimatorParams base{16, 0.25, 10000, {}};  // weights are used by the fixed method only
    FeatureSchema schema = FeatureSchema::all();
};

struct GaSettings {
    std::size_t population = 50;
    std::size_t generations = 100;
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    double elitism = 0.05;
};

enum class CloudKind { linear, empirical };

struct CloudSettings {
    CloudKind kind = CloudKind::linear;
    std::vector<double> factors = default_overhead_grid();
    double provisioning_seconds = 0;
    std::string ratio_table;  // empirical only
};

enum class CutoffKind { fit, fixed, disabled };

struct CutoffSettings {
    CutoffKind kind = CutoffKind::fit;
    // The fixed cutoff, and the fallback when fitting is impossible.
    CutoffModel fixed{};
    bool fallback_to_fixed = true;
};

struct RunConfig {
    std::string trace_path;
    std::optional<std::int64_t> total_procs;  // defaults to the header's MaxProcs
    StudyCounts counts{2000, 500, std::nullopt, 10000};
    EstimatorSettings wait;
    EstimatorSettings run;
    GaSettings ga;
    CloudSettings cloud;
    CutoffSettings cutoff;
    std::string output_dir = "out";
    std::uint64_t seed = 1;
    unsigned workers = 0;  // 0: all available

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// Relative paths are resolved against `base_dir`. Unknown keys are rejected.
RunConfig config_from_json(const Json& j, const std::string& base_dir = "");
RunConfig load_config(const std::string& path);
// Worker count is left out: it never changes results.
Json to_json(const RunConfig& config);

Json to_json(const EstimatorParams& params);
EstimatorParams params_from_json(const Json& j);

Json to_json(const FeatureSchema& schema);
FeatureSchema schema_from_json(const Json& j);

Json to_json(const CutoffModel& model);
CutoffModel cutoff_from_json(const Json& j);

std::string_view to_string(EstimatorMethod method);
EstimatorMethod estimator_method_from_string(std::string_view name);

GaOptions ga_options(const RunConfig& config, const FeatureSchema& schema);

// Reads a JSON document; throws InputError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace hca
