#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/partitions.hpp"

namespace goldbach::engine {

struct SweepConfig {
    std::uint64_t lo = 6;             // inclusive, even, >= 6
    std::uint64_t hi = 0;             // exclusive, even
    std::uint64_t segment_span = 1u << 21;  // window width in integers
    unsigned workers = 1;
    bool certify = true;              // build + verify the certificate per even
    bool collect_comet = false;
    std::optional<std::string> checkpoint_path;
    std::uint64_t checkpoint_interval = 1'000'000;  // evens between saves

    // Test hook: stop and checkpoint at the first chunk boundary >= this
    // even, returning the partial report.
    std::optional<std::uint64_t> stop_before_e;
};

// A new strictly-larger minimal p1 first seen at e.
struct RecordEntry {
    std::uint64_t e;
    std::uint64_t min_p1;

    bool operator==(const RecordEntry&) const = default;
};

struct RangeReport {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t verified_count = 0;
    std::vector<std::uint64_t> failures;  // evens with no partition
    std::vector<RecordEntry> records;
    std::optional<std::vector<partitions::CometPoint>> comet;
    std::chrono::duration<double> wall_time{0};
};

// Sweeps every even e in [cfg.lo, cfg.hi): finds the minimal partition,
// optionally certifies the circle construction, and tracks records.
// The report (wall_time aside) is identical for any segment_span and
// worker count.
RangeReport verify_range(const SweepConfig& cfg);

// Combines reports over adjacent ranges (a.hi == b.lo); records are
// re-filtered for strict ascent across the boundary. Associative.
RangeReport merge_reports(const RangeReport& a, const RangeReport& b);

// Everything needed to continue an interrupted sweep.
struct SweepProgress {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t next_e = 0;  // first unprocessed even
    std::uint64_t verified = 0;
    std::vector<RecordEntry> records;
};

// Line-oriented key=value checkpoint with a whole-file checksum.
void checkpoint_save(const SweepProgress& state, const std::string& path);
SweepProgress checkpoint_resume(const std::string& path);

// Continues the sweep recorded at checkpoint_path; runtime knobs
// (workers, span, certify, checkpointing) come from cfg, the range and
// progress from the file. Returns the report for the full [lo, hi).
RangeReport resume_sweep(const std::string& checkpoint_path, const SweepConfig& cfg);

// Canonical text form of a report, wall_time excluded. Used for
// determinism comparisons and as the CLI text format.
std::string format_report(const RangeReport& r);

}  // namespace goldbach::engine
