#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "wilsonx/core.hpp"

namespace wilsonx {

enum class OutputFormat { table, csv, json_lines };

OutputFormat parse_output_format(const std::string& name);

struct ScanConfig {
    uint64_t c = 0;
    uint64_t n_lo = 2;
    uint64_t n_hi = 2;
    OutputFormat format = OutputFormat::table;
    unsigned jobs = 1;
    bool fail_fast = false;
};

struct ScanSummary {
    uint64_t rows = 0;
    uint64_t hits = 0;            // criterion_passes
    uint64_t misses = 0;
    uint64_t not_applicable = 0;  // n below (2c+3)^2
    uint64_t violations = 0;      // applicable rows disagreeing with theory

    bool operator==(const ScanSummary&) const = default;
};

void accumulate(ScanSummary& summary, const ScanRecord& record);

// Computes one record per n in [n_lo, n_hi] and hands them to `sink` in
// ascending n order. Work is block-partitioned across `jobs` workers; the
// emitted stream and the summary are byte-for-byte independent of the
// parallelism degree. With fail_fast, emission stops at the first violating
// record (workers then wind down); the summary covers emitted rows only.
ScanSummary scan_range(const ScanConfig& config,
                       const std::function<void(const ScanRecord&)>& sink);

// Row rendering. csv and json-lines round-trip through the matching parser.
std::string csv_header();
std::string format_record_csv(const ScanRecord& record);
std::string format_record_json(const ScanRecord& record);
std::string table_header();
std::string format_record_table(const ScanRecord& record);
std::string format_summary(const ScanSummary& summary);

ScanRecord parse_record_csv(const std::string& line);
ScanRecord parse_record_json(const std::string& line);

}  // namespace wilsonx
