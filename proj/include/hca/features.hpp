#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hca/simkernel.hpp"
#include "hca/swf.hpp"

namespace hca {

// The fourteen job features, in schema order.
enum class Feature : std::uint8_t {
    user_id,
    group_id,
    queue_id,
    submit_time,
    requested_time,
    requested_procs,
    queue_size,
    queued_work,
    remaining_work,
    weekday,
    time_since_midnight,
    free_procs,
    promise,
    user_jobs,
};

inline constexpr std::size_t kFeatureCount = 14;

enum class FeatureKind { categorical, numeric };

std::string_view feature_name(Feature f);
FeatureKind feature_kind(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

inline constexpr std::size_t index_of(Feature f) { return static_cast<std::size_t>(f); }
inline constexpr Feature feature_at(std::size_t i) { return static_cast<Feature>(i); }

using FeatureMask = std::bitset<kFeatureCount>;

struct FeatureSchema {
    FeatureMask active;

    static FeatureSchema all();
    // Everything except the promise and user-jobs features.
    static FeatureSchema baseline();
    // Throws ConfigError on unknown names or an empty selection.
    static FeatureSchema from_names(std::span<const std::string> names);

    bool is_active(Feature f) const { return active.test(index_of(f)); }
    std::vector<Feature> features() const;
    void validate() const;
};

// Feature values of one job. Categorical tokens are stored as doubles
// (integral ids) and only ever compared for equality.
struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    FeatureMask present;

    bool has(Feature f) const { return present.test(index_of(f)); }
    double get(Feature f) const { return values[index_of(f)]; }
    void set(Feature f, double v);
    void clear(Feature f);

    bool operator==(const FeatureVector&) const = default;
};

// Builds the feature vector of a job at its submission instant. Throws
// ConfigError naming the feature when an active feature's source is absent
// (queue features without a snapshot, promise without a simulation).
FeatureVector extract(const JobRecord& job, const QueueSnapshot* snapshot, const Promise* promise,
                      const TraceHeader& header, const FeatureSchema& schema);

// Day of week (0 = Monday) and seconds since local midnight of a submission.
struct CalendarPosition {
    int weekday = 0;
    std::int64_t seconds_since_midnight = 0;
};
CalendarPosition calendar_position(std::int64_t unix_time, std::int64_t tz_offset_seconds);

struct FeatureRange {
    double min = 0;
    double max = 0;
    bool seen = false;

    double span() const { return max - min; }
};

// Observed min/max of each numeric feature over a knowledge base.
struct NormalizationTable {
    std::array<FeatureRange, kFeatureCount> ranges{};

    // (value - min) / (max - min); 0 for a zero or unseen range. Not clamped.
    double normalize(Feature f, double value) const;
};

NormalizationTable normalize_numeric(std::span<const FeatureVector> kb_features);

}  // namespace hca
