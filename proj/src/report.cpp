#include "strongbond/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace strongbond {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Method m) { return m == Method::ExactSearch ? "exact-search" : "witness+refutation"; }

std::string_view to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::Ok: return "ok";
        case EntryStatus::Skipped: return "skipped";
        case EntryStatus::Error: return "error";
    }
    return "?";
}

ReportSummary Report::summary() const {
    ReportSummary s;
    for (const auto& e : entries) {
        if (e.status == EntryStatus::Skipped) {
            ++s.skipped;
        } else if (e.passed()) {
            ++s.pass;
        } else {
            ++s.fail;
        }
    }
    return s;
}

bool Report::all_passed() const { return summary().fail == 0; }

ReportFormat parse_report_format(std::string_view s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "text-table") return ReportFormat::TextTable;
    throw std::invalid_argument("unknown report format: " + std::string(s));
}

namespace {

ordered_json optional_count(const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json("n/a");
}

ordered_json entry_json(const ReportEntry& e, bool include_timing) {
    ordered_json instance;
    instance["family"] = to_string(e.instance.family);
    instance["m"] = e.instance.m;
    instance["n"] = e.instance.n;
    instance["branches"] = e.instance.branches;
    instance["graph"] = e.instance.graph_path;

    ordered_json j;
    j["instance"] = std::move(instance);
    j["quantity"] = to_string(e.quantity);
    j["formula_value"] = optional_count(e.formula_value);
    j["computed_value"] = e.computed_value ? ordered_json(*e.computed_value) : ordered_json(nullptr);
    j["method"] = to_string(e.method);
    j["match"] = e.match;
    j["status"] = to_string(e.status);
    if (include_timing) j["elapsed_ms"] = e.elapsed_ms;
    ordered_json witness = ordered_json::array();
    if (e.quantity == Quantity::Gamma) {
        for (Vertex v : e.witness_vertices) witness.push_back(v);
    } else {
        for (const Edge& edge : e.witness_edges) witness.push_back({edge.u, edge.v});
    }
    j["witness"] = std::move(witness);
    j["note"] = e.note;
    return j;
}

std::string witness_text(const ReportEntry& e) {
    std::ostringstream out;
    out << '{';
    if (e.quantity == Quantity::Gamma) {
        for (std::size_t i = 0; i < e.witness_vertices.size(); ++i) out << (i ? "," : "") << e.witness_vertices[i];
    } else {
        for (std::size_t i = 0; i < e.witness_edges.size(); ++i) {
            out << (i ? "," : "") << e.witness_edges[i].u << '-' << e.witness_edges[i].v;
        }
    }
    out << '}';
    return out.str();
}

std::string text_table(const Report& report, bool include_timing) {
    std::ostringstream out;
    out << std::left << std::setw(18) << "instance" << std::setw(9) << "quantity" << std::setw(9) << "formula"
        << std::setw(10) << "computed" << std::setw(20) << "method" << std::setw(8) << "status" << std::setw(7)
        << "match";
    if (include_timing) out << std::setw(12) << "ms";
    out << "witness\n";
    for (const auto& e : report.entries) {
        out << std::setw(18) << e.instance.label() << std::setw(9) << to_string(e.quantity) << std::setw(9)
            << (e.formula_value ? std::to_string(*e.formula_value) : "n/a") << std::setw(10)
            << (e.computed_value ? std::to_string(*e.computed_value) : "-") << std::setw(20) << to_string(e.method)
            << std::setw(8) << to_string(e.status) << std::setw(7) << (e.match ? "yes" : "NO");
        if (include_timing) out << std::setw(12) << std::fixed << std::setprecision(1) << e.elapsed_ms;
        out << witness_text(e);
        if (!e.note.empty()) out << "  # " << e.note;
        out << '\n';
    }
    const auto s = report.summary();
    out << "pass=" << s.pass << " fail=" << s.fail << " skipped=" << s.skipped;
    if (include_timing) out << " total_ms=" << std::fixed << std::setprecision(1) << report.total_elapsed_ms;
    out << '\n';
    return out.str();
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format, bool include_timing) {
    if (format == ReportFormat::TextTable) return text_table(report, include_timing);

    ordered_json j;
    j["tool_version"] = report.tool_version;
    ordered_json config = ordered_json::object();
    for (const auto& [key, value] : report.config) config[key] = value;
    j["config"] = std::move(config);
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) entries.push_back(entry_json(e, include_timing));
    j["entries"] = std::move(entries);
    const auto s = report.summary();
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    if (include_timing) j["total_elapsed_ms"] = report.total_elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace strongbond
