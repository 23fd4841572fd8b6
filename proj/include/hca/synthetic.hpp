#pragma once

// Seeded generator of SWF-like workloads with bursty arrivals, per-user job
// habits and inflated runtime requests. Wait times come from replaying the
// jobs through the conservative backfilling simulator.

#include <cstddef>
#include <cstdint>

#include "hca/swf.hpp"

namespace hca {

struct SyntheticTraceOptions {
    std::size_t jobs = 22000;
    std::int64_t total_procs = 128;
    std::uint64_t seed = 20240601;
    std::size_t users = 80;
    std::size_t groups = 12;
    std::size_t queues = 4;
    double target_load = 0.7;        // offered processor-seconds / capacity
    double burst_rate_factor = 3.0;  // arrival rate inside bursts vs. calm periods
    // Each user's typical run time is drawn log-uniformly from this range.
    double typical_runtime_min = 120;
    double typical_runtime_max = 4.0 * 3600;
    double runtime_spread = 0.8;  // standard deviation of log run time around a user's typical value
    std::int64_t max_runtime = 24 * 3600;
    // Requested time is run time times a per-user factor drawn from this range.
    double overestimate_min = 1.1;
    double overestimate_max = 3.0;
    double limit_request_share = 0.05;  // jobs that simply ask for the queue limit
    double burst_mean_seconds = 3.0 * 3600;
    double calm_mean_seconds = 9.0 * 3600;
    std::int64_t unix_start_time = 1136073600;  // 2006-01-01 00:00 UTC
    std::int64_t timezone_offset_seconds = 0;
};

// Jobs sorted by (submit_time, job_id) with wait times filled in; the header
// carries UnixStartTime, TimeZone and MaxProcs.
ParsedTrace synthetic_trace(const SyntheticTraceOptions& options);

}  // namespace hca
