#pragma once

// Cloud-versus-local speed ratios and the cloud runtimes derived from them.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hca {

// ratio(j) = overhead * j + independent.
struct LinearCloudModel {
    double overhead = 0.0;
    double independent = 1.0;
};

struct ScenarioId {
    std::string cloud;
    std::string local;
    std::string application;

    std::string label() const { return cloud + "/" + local + "/" + application; }
    bool operator==(const ScenarioId&) const = default;
};

// Measured ratios for one (cloud, local, application) triple, interpolated
// piecewise-linearly and held constant past the first/last point.
struct EmpiricalRatioModel {
    static constexpr std::int64_t kMaxProcs = 256;

    ScenarioId scenario;
    std::vector<std::pair<std::int64_t, double>> points;  // sorted by procs

    void validate() const;
};

struct CloudModel {
    std::variant<LinearCloudModel, EmpiricalRatioModel> model;
    double provisioning_seconds = 0.0;  // added to every cloud runtime

    std::string describe() const;
};

// Throws InputError("outside measured range") when the empirical model is
// asked about more than 256 processors, ConfigError for j_c < 1.
double speed_ratio(const CloudModel& cloud, std::int64_t procs);
double speed_ratio(const LinearCloudModel& model, std::int64_t procs);
double speed_ratio(const EmpiricalRatioModel& model, std::int64_t procs);

// True when the model can price a job of this size.
bool in_range(const CloudModel& cloud, std::int64_t procs);

// speed_ratio * local_runtime + provisioning.
double cloud_runtime(const CloudModel& cloud, std::int64_t procs, double local_runtime);

// Overhead factors of the standard sweep.
std::vector<double> default_overhead_grid();

// Ratio-table text format:
//
//   # comment
//   scenario <cloud> <local> <application>
//   <procs> <ratio>
//   ...
//
// Any number of scenario blocks. Errors carry the line number.
std::vector<EmpiricalRatioModel> parse_ratio_table(std::istream& in);
std::vector<EmpiricalRatioModel> parse_ratio_table_file(const std::string& path);
void write_ratio_table(std::ostream& out, const std::vector<EmpiricalRatioModel>& models);

// Deterministic 3 clouds x 3 locals x 8 applications sample for exercising
// the empirical path without external measurements.
std::vector<EmpiricalRatioModel> synthetic_ratio_tables(std::uint64_t seed);

}  // namespace hca
