#pragma once

// Discrete-event conservative backfilling over a flat processor pool.
//
// Every job gets a reservation when it is submitted: the earliest time at
// which its processors are free for its requested time, without touching any
// reservation granted before. That first reservation is the job's promise.
// Jobs execute for their actual run time; when one finishes early the
// waiting jobs are re-placed in grant order, each at its earliest fit, which
// can only move a reservation earlier.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hca/swf.hpp"

namespace hca {

// Step function of free processors over time. Each breakpoint holds the free
// count from its time until the next breakpoint; the last one extends to
// infinity.
class ReservationProfile {
public:
    explicit ReservationProfile(std::int64_t total_procs, std::int64_t origin = 0);

    std::int64_t total_procs() const { return total_; }
    std::int64_t free_at(std::int64_t time) const;

    // Earliest t >= from with at least `procs` free throughout [t, t + duration).
    std::int64_t earliest_fit(std::int64_t from, std::int64_t procs, std::int64_t duration) const;

    void reserve(std::int64_t start, std::int64_t duration, std::int64_t procs);
    void release(std::int64_t start, std::int64_t end, std::int64_t procs);

    // Forgets the profile before `time`.
    void prune_before(std::int64_t time);

    std::vector<std::pair<std::int64_t, std::int64_t>> breakpoints() const;

private:
    void split_at(std::int64_t time);
    void coalesce(std::int64_t from, std::int64_t to);

    std::int64_t total_;
    std::map<std::int64_t, std::int64_t> steps_;
};

struct Promise {
    std::int64_t job_id = 0;
    std::int64_t promised_start = 0;
    std::int64_t promised_wait = 0;  // promised_start - submit_time
};

// Queue state seen by a job at its submission, before its own insertion.
struct QueueSnapshot {
    std::int64_t at_time = 0;
    std::int64_t queue_size = 0;
    std::int64_t queued_work = 0;     // processor-seconds
    std::int64_t remaining_work = 0;  // processor-seconds
    std::int64_t free_procs = 0;
    std::int64_t user_jobs = 0;  // jobs of the submitting user waiting or running
};

struct WaitingEntry {
    std::int64_t requested_time = 0;
    std::int64_t procs = 0;
};

struct RunningEntry {
    std::int64_t start = 0;
    std::int64_t requested_time = 0;
    std::int64_t procs = 0;
};

struct QueueState {
    std::vector<WaitingEntry> waiting;
    std::vector<RunningEntry> running;
};

struct WorkTerms {
    std::int64_t queued_work = 0;
    std::int64_t remaining_work = 0;
};

// queued = sum of requested_time * procs over waiting jobs;
// remaining = sum of max(0, start + requested_time - now) * procs over running jobs.
WorkTerms snapshot_work_terms(const QueueState& state, std::int64_t now);

enum class SimEventKind { submit, start, finish };

struct SimEvent {
    std::int64_t time = 0;
    SimEventKind kind = SimEventKind::submit;
    std::int64_t job_id = 0;

    bool operator==(const SimEvent&) const = default;
};

struct SimJobOutcome {
    std::int64_t job_id = 0;
    bool schedulable = false;
    std::int64_t procs = 0;           // processors held while running
    std::int64_t reserve_length = 0;  // requested time used for reservations
    std::int64_t exec_length = 0;     // min(actual run time, reserve_length)
    bool requested_time_substituted = false;
    std::optional<Promise> promise;
    QueueSnapshot snapshot;
    std::int64_t start = -1;
    std::int64_t finish = -1;
};

struct SimulationResult {
    std::int64_t total_procs = 0;
    std::vector<SimJobOutcome> jobs;  // same order as the input
    std::vector<SimEvent> events;
    std::size_t unschedulable = 0;
    std::size_t requested_time_substituted = 0;
    std::vector<std::string> warnings;
};

// Runs the whole trace. `jobs` must be sorted by (submit_time, job_id).
// Jobs needing more than total_procs (or with no processor count) are
// reported unschedulable and skipped.
SimulationResult simulate(std::span<const JobRecord> jobs, std::int64_t total_procs);

// ---------------------------------------------------------------------------
// Augmented trace: SWF columns followed by
//   promised_wait queue_size queued_work remaining_work free_procs user_jobs
// promised_wait is -1 for unschedulable jobs.

inline constexpr std::size_t kAugmentedColumnCount = 6;

struct AugmentedJob {
    JobRecord job;
    std::optional<Promise> promise;
    QueueSnapshot snapshot;
};

struct AugmentedTrace {
    TraceHeader header;
    std::vector<AugmentedJob> jobs;
    std::vector<ParseIssue> issues;
    std::size_t skipped_lines = 0;
};

void write_augmented_trace(std::ostream& out, const TraceHeader& header,
                           std::span<const JobRecord> jobs, const SimulationResult& sim);
AugmentedTrace read_augmented_trace(std::istream& in, std::string source_name = {});
AugmentedTrace read_augmented_trace_file(const std::string& path);

std::vector<JobRecord> job_records(const AugmentedTrace& trace);

}  // namespace hca
