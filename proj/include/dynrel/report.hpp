#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynrel/analytic.hpp"
#include "dynrel/monte_carlo.hpp"

namespace dynrel {

enum class ReportFormat : std::uint8_t { Json, Csv };

/// One reported figure: an analytic value or a simulation estimate at one
/// time point. Field order is stable across formats.
struct ReportRow {
    std::string model;
    std::string kind;    // "dft" | "drbd"
    std::string method;  // "dft-pie" | "drbd-structural" | "monte-carlo" | ...
    double time = 0.0;
    double value = 0.0;
    std::optional<double> error_bound;
    std::optional<double> std_err;
    std::optional<long> term_count;
    std::optional<std::uint64_t> seed;
    std::optional<long long> n;
};

ReportRow row_from(const AnalysisResult& r);
ReportRow row_from(const Model& m, double t, const Estimate& e, const std::string& method);

/// Render rows as a JSON array or a CSV table with a header row. Values
/// round-trip bit-exactly through the JSON form.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format);

}  // namespace dynrel
