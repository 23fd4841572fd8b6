#pragma once

// Standard Workload Format (SWF) traces: parsing, serialization and
// partitioning into the slices used by tuning and evaluation.
//
// A data line has 18 whitespace-separated fields in the archive order:
//
//   1 job number          7 used memory          13 group id
//   2 submit time         8 requested procs      14 executable number
//   3 wait time           9 requested time       15 queue number
//   4 run time           10 requested memory     16 partition number
//   5 allocated procs    11 status               17 preceding job
//   6 average cpu time   12 user id              18 think time
//
// -1 denotes an unknown value in any field. Lines starting with ';' are
// comments; "; Key: value" comments form the header.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hca {

inline constexpr std::size_t kSwfFieldCount = 18;

struct TraceHeader {
    std::optional<std::int64_t> unix_start_time;
    std::optional<std::int64_t> timezone_offset_seconds;
    std::optional<std::int64_t> max_procs;
    std::string source_name;
    // Every "; Key: value" pair in file order, including the ones above.
    std::vector<std::pair<std::string, std::string>> entries;
};

enum class JobStatus { completed, failed, cancelled, unknown };

std::string_view to_string(JobStatus status);

// Fields the pipeline does not interpret but keeps so a record can be
// written back unchanged.
struct SwfPassthrough {
    std::optional<double> average_cpu_time;
    std::optional<double> used_memory;
    std::optional<double> requested_memory;
    std::optional<std::int64_t> executable_id;
    std::optional<std::int64_t> partition_id;
    std::optional<std::int64_t> preceding_job;
    std::optional<std::int64_t> think_time;

    bool operator==(const SwfPassthrough&) const = default;
};

struct JobRecord {
    std::int64_t job_id = 0;
    std::int64_t submit_time = 0;  // seconds since trace start
    std::optional<std::int64_t> wait_time;
    std::optional<std::int64_t> run_time;
    std::optional<std::int64_t> allocated_procs;
    std::optional<std::int64_t> requested_procs;
    std::optional<std::int64_t> requested_time;
    std::optional<std::int64_t> user_id;
    std::optional<std::int64_t> group_id;
    std::optional<std::int64_t> queue_id;
    std::optional<std::int64_t> status_code;
    JobStatus status = JobStatus::unknown;
    SwfPassthrough passthrough;

    bool operator==(const JobRecord&) const = default;
};

JobStatus status_from_code(std::optional<std::int64_t> code);

struct ParseIssue {
    std::size_t line = 0;
    std::string message;
};

struct ParsedTrace {
    TraceHeader header;
    std::vector<JobRecord> jobs;  // sorted by (submit_time, job_id)
    std::vector<ParseIssue> issues;
    std::size_t skipped_lines = 0;
};

struct ParsedLine {
    JobRecord job;
    std::vector<double> trailing;  // columns after the 18 SWF fields
};

// Parses one data line carrying exactly 18 + trailing_columns fields.
// Throws InputError describing the problem when the line is malformed.
ParsedLine parse_data_line(std::string_view line, std::size_t trailing_columns = 0);

// Parses a whole trace. Malformed data lines are skipped and reported in
// `issues`; the parser never throws on line content.
ParsedTrace parse_swf(std::istream& in, std::string source_name = {});
ParsedTrace parse_swf_file(const std::string& path);

// Applies a "; Key: value" comment to the header; other comments are ignored.
void apply_header_line(std::string_view line, TraceHeader& header);

std::string format_swf_line(const JobRecord& job);
void write_swf_header(std::ostream& out, const TraceHeader& header);

// Orders jobs by submit time, then job id.
void sort_jobs(std::vector<JobRecord>& jobs);

// Shortest round-trip decimal text for a double.
std::string format_number(double value);

// ---------------------------------------------------------------------------
// Study partitions

struct StudyCounts {
    std::size_t discard = 0;
    std::size_t tune = 0;
    // Training fill length. Empty means "everything between the tuning
    // slice and the test slice", with the test slice at the end of the trace.
    std::optional<std::size_t> train;
    std::size_t test = 0;
};

struct Partition {
    std::string name;
    std::vector<JobRecord> jobs;  // admitted jobs only
    std::size_t begin = 0;        // first covered position in the stream
    std::size_t positions = 0;    // records covered, admitted or not
    std::size_t excluded = 0;     // run_time <= 0 or requested_procs <= 0
};

struct StudyPartition {
    Partition discard;
    Partition tune;
    Partition train;
    Partition test;
    std::size_t unused_tail = 0;
};

// True when the job may enter label sets: known positive run time and
// requested processors.
bool admissible(const JobRecord& job);

// Splits a sorted job stream into discard | tune | train | test slices in
// submit order. Throws ConfigError naming the shortfall when the trace is
// too short.
StudyPartition filter_for_study(const std::vector<JobRecord>& jobs, const StudyCounts& counts);

// One JSON object per line: a job line for every covered record, then one
// summary line per partition and one for the unused tail.
void write_partition_manifest(std::ostream& out, const StudyPartition& study,
                              const std::vector<JobRecord>& jobs);

}  // namespace hca
