#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongbond/graph.hpp"
#include "strongbond/instance.hpp"

namespace strongbond {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Method { ExactSearch, WitnessRefutation };
enum class EntryStatus { Ok, Skipped, Error };

std::string_view to_string(Method m);
std::string_view to_string(EntryStatus s);

struct ReportEntry {
    InstanceSpec instance;
    Quantity quantity = Quantity::Gamma;
    /// Empty when no closed form applies ("n/a").
    std::optional<std::size_t> formula_value;
    std::optional<std::size_t> computed_value;
    Method method = Method::ExactSearch;
    bool match = false;
    EntryStatus status = EntryStatus::Ok;
    double elapsed_ms = 0.0;
    /// Exactly one of these is used, depending on `quantity`.
    std::vector<Vertex> witness_vertices;
    std::vector<Edge> witness_edges;
    std::string note;

    bool passed() const { return status == EntryStatus::Ok && match; }
};

struct ReportSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

struct Report {
    std::string tool_version{kToolVersion};
    /// Echo of the settings that can change results, in insertion order.
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<ReportEntry> entries;
    double total_elapsed_ms = 0.0;

    ReportSummary summary() const;
    /// True iff every non-skipped entry matches.
    bool all_passed() const;
};

enum class ReportFormat { Json, TextTable };

/// "json" or "text-table"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view s);

/// JSON uses fixed field order:
///   tool_version, config, entries[], summary{pass, fail, skipped}, total_elapsed_ms
/// and per entry:
///   instance{family, m, n, branches, graph}, quantity, formula_value, computed_value,
///   method, match, status, elapsed_ms, witness, note
/// With include_timing = false both elapsed fields are omitted.
std::string emit_report(const Report& report, ReportFormat format, bool include_timing = true);

}  // namespace strongbond
