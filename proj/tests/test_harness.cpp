#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "strongbond/report.hpp"
#include "strongbond/verify.hpp"

using namespace strongbond;
using json = nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("strongbond_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(STRONGBOND_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(VerifyInstance, BondageWitnessAndRefutation) {
    const ReportEntry e = verify_instance(InstanceSpec::km_pn(2, 3), Quantity::Bondage, {});
    EXPECT_EQ(e.formula_value, 1U);
    EXPECT_EQ(e.computed_value, 1U);
    EXPECT_EQ(e.method, Method::WitnessRefutation);
    EXPECT_TRUE(e.passed());
    EXPECT_EQ(e.witness_edges.size(), 1U);
}

TEST(VerifyInstance, Gamma) {
    const ReportEntry e = verify_instance(InstanceSpec::km_pn(3, 7), Quantity::Gamma, {});
    EXPECT_EQ(e.formula_value, 3U);
    EXPECT_EQ(e.computed_value, 3U);
    EXPECT_EQ(e.method, Method::ExactSearch);
    EXPECT_TRUE(e.passed());
}

TEST(VerifyInstance, FileGraphHasNoFormula) {
    const auto path = temp_file("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    const ReportEntry e = verify_instance(InstanceSpec::file(path.string()), Quantity::Bondage, {});
    EXPECT_FALSE(e.formula_value.has_value());
    EXPECT_EQ(e.computed_value, 3U);
    EXPECT_TRUE(e.passed());
    const auto j = json::parse(emit_report(Report{std::string(kToolVersion), {}, {e}, 0.0}, ReportFormat::Json));
    EXPECT_EQ(j["entries"][0]["formula_value"], "n/a");
}

TEST(VerifyInstance, FullSearchAgreesWithTwoSided) {
    VerifyConfig full;
    full.full_search = true;
    for (std::size_t m = 2; m <= 3; ++m) {
        for (std::size_t n = 2; n <= 6; ++n) {
            const auto a = verify_instance(InstanceSpec::km_pn(m, n), Quantity::Bondage, {});
            const auto b = verify_instance(InstanceSpec::km_pn(m, n), Quantity::Bondage, full);
            EXPECT_EQ(b.method, Method::ExactSearch);
            EXPECT_EQ(a.computed_value, b.computed_value);
            EXPECT_TRUE(a.passed() && b.passed());
        }
    }
}

TEST(VerifyInstance, OverBudgetIsSkippedNotPassed) {
    VerifyConfig tight;
    tight.max_size = 3;
    const auto e = verify_instance(InstanceSpec::km_pn(3, 7), Quantity::Bondage, tight);
    EXPECT_EQ(e.status, EntryStatus::Skipped);
    EXPECT_FALSE(e.passed());

    const auto f = verify_instance(InstanceSpec::km_pn(1, 7), Quantity::Bondage, VerifyConfig{.max_size = 1});
    EXPECT_EQ(f.status, EntryStatus::Skipped);
}

TEST(VerifyInstance, ErrorsBecomeEntries) {
    const auto e = verify_instance(InstanceSpec::file("/nonexistent/graph.txt"), Quantity::Gamma, {});
    EXPECT_EQ(e.status, EntryStatus::Error);
    EXPECT_FALSE(e.note.empty());
    const auto k1 = verify_instance(InstanceSpec::complete(1), Quantity::Bondage, {});
    EXPECT_EQ(k1.status, EntryStatus::Error);
}

TEST(VerifyInstance, StarlikeMixedResiduesFallBackToSearch) {
    const auto e = verify_instance(InstanceSpec::km_starlike(2, {1, 2}), Quantity::Bondage, {});
    EXPECT_FALSE(e.formula_value.has_value());
    EXPECT_EQ(e.method, Method::ExactSearch);
    // S(1,2) is P_4.
    EXPECT_EQ(e.computed_value, 3U);
}

TEST(Sweep, KmPnBondageRange) {
    SweepRanges r;
    r.family = Family::KmPn;
    r.quantity = Quantity::Bondage;
    r.m_values = {1, 2, 3};
    r.n_values = {2, 3, 4, 5, 6, 7};
    const Report report = sweep(r, {});
    ASSERT_EQ(report.entries.size(), 18U);
    EXPECT_EQ(report.summary().pass, 18U);
    EXPECT_TRUE(report.all_passed());
}

TEST(Sweep, StarlikeGamma) {
    SweepRanges r;
    r.family = Family::KmStarlike;
    r.quantity = Quantity::Gamma;
    r.m_values = {1, 2};
    r.branch_counts = {2, 3};
    r.branch_lengths = {1, 2, 3, 4};
    const Report report = sweep(r, {});
    EXPECT_EQ(report.entries.size(), 2U * (10 + 20));
    EXPECT_EQ(report.summary().fail, 0U);
    EXPECT_EQ(report.summary().skipped, 0U);
}

TEST(Sweep, EmptyRangeIsAnError) {
    SweepRanges r;
    r.m_values = {2};
    EXPECT_THROW(sweep(r, {}), std::invalid_argument);
    EXPECT_THROW(sweep(std::vector<InstanceSpec>{}, Quantity::Gamma, {}), std::invalid_argument);
}

TEST(Sweep, DeterministicAcrossJobs) {
    SweepRanges r;
    r.family = Family::KmPn;
    r.quantity = Quantity::Bondage;
    r.m_values = {3, 1, 2};
    r.n_values = {5, 2, 3, 4};
    VerifyConfig one;
    VerifyConfig four;
    four.jobs = 4;
    const auto a = emit_report(sweep(r, one), ReportFormat::Json, false);
    const auto b = emit_report(sweep(r, four), ReportFormat::Json, false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("elapsed"), std::string::npos);
}

TEST(Report, EmptyAndSummary) {
    const Report empty;
    const auto j = json::parse(emit_report(empty, ReportFormat::Json));
    EXPECT_TRUE(j["entries"].is_array());
    EXPECT_TRUE(j["entries"].empty());

    Report one;
    one.entries.push_back(verify_instance(InstanceSpec::path(4), Quantity::Gamma, {}));
    const auto k = json::parse(emit_report(one, ReportFormat::Json));
    EXPECT_EQ(k["summary"]["pass"], 1);
    EXPECT_EQ(k["summary"]["fail"], 0);

    Report mixed = one;
    ReportEntry bad = one.entries.front();
    bad.match = false;
    mixed.entries.push_back(bad);
    EXPECT_FALSE(mixed.all_passed());
    EXPECT_EQ(mixed.summary().fail, 1U);
}

TEST(Report, FieldOrderIsFixed) {
    Report report;
    report.config = config_echo({});
    report.entries.push_back(verify_instance(InstanceSpec::km_pn(2, 3), Quantity::Bondage, {}));
    const auto j = nlohmann::ordered_json::parse(emit_report(report, ReportFormat::Json));
    std::vector<std::string> top;
    for (const auto& [k, v] : j.items()) top.push_back(k);
    EXPECT_EQ(top, (std::vector<std::string>{"tool_version", "config", "entries", "summary", "total_elapsed_ms"}));
    std::vector<std::string> entry;
    for (const auto& [k, v] : j["entries"][0].items()) entry.push_back(k);
    EXPECT_EQ(entry, (std::vector<std::string>{"instance", "quantity", "formula_value", "computed_value", "method",
                                               "match", "status", "elapsed_ms", "witness", "note"}));
}

TEST(Report, FormatParsing) {
    EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
    EXPECT_EQ(parse_report_format("text-table"), ReportFormat::TextTable);
    EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
    Report r;
    r.entries.push_back(verify_instance(InstanceSpec::km_pn(2, 3), Quantity::Gamma, {}));
    const auto text = emit_report(r, ReportFormat::TextTable);
    EXPECT_NE(text.find("K2xP3"), std::string::npos);
    EXPECT_NE(text.find("pass=1 fail=0"), std::string::npos);
}

TEST(MdsStructure, Examples) {
    const auto r23 = check_mds_structure(2, 3);
    EXPECT_TRUE(r23.passed());
    EXPECT_EQ(r23.mds_count, 2U);
    EXPECT_TRUE(check_mds_structure(2, 5).passed());
    EXPECT_TRUE(check_mds_structure(3, 4).passed());
    EXPECT_THROW(check_mds_structure(5, 5), EnumerationCapExceeded);
    const auto j = json::parse(r23.to_json());
    EXPECT_EQ(j["violations"].size(), 0U);
}

TEST(BlockLemmas, NoCounterexamples) {
    std::mt19937_64 rng(2024);
    for (auto lemma : {BlockLemma::ThreeColumn, BlockLemma::TwoColumn, BlockLemma::Star}) {
        const auto r = run_block_lemma_trials(lemma, 300, rng);
        EXPECT_EQ(r.trials, 300U);
        EXPECT_EQ(r.counterexamples, 0U) << to_string(lemma);
    }
}

TEST(RandomGenerators, TreesAreTrees) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 12; ++n) {
        const Graph t = random_tree(n, rng);
        EXPECT_EQ(t.order(), n);
        EXPECT_EQ(t.edge_count() + 1, n);
        // Connected: a closed-neighborhood flood from 0 reaches everything.
        VertexSet seen(n, {0});
        for (std::size_t step = 0; step < n; ++step) {
            VertexSet next = seen;
            seen.for_each([&](Vertex v) { next |= t.closed_neighborhood(v); });
            seen = next;
        }
        EXPECT_EQ(seen.size(), n);
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("verify --family km-pn --m 2 --n 3"), 0);
    EXPECT_EQ(run_cli("sweep --family km-pn --m 1..2 --n 2..4 --json --jobs 2"), 0);
    EXPECT_EQ(run_cli("gamma --family path --n 9"), 0);
    EXPECT_EQ(run_cli("mds-check --m 2 --n 2..5"), 0);
    // K_1 has no bondage set: one error entry next to two passing ones.
    EXPECT_EQ(run_cli("sweep --family complete --m 1..3 --quantity bondage"), 1);
    EXPECT_EQ(run_cli("verify --family file --graph /nonexistent/g.txt"), 1);
    EXPECT_EQ(run_cli("sweep --family bogus"), 2);
    EXPECT_NE(run_cli("verify --no-such-flag"), 0);
}

TEST(Cli, ProductOutputParses) {
    const auto out = std::filesystem::temp_directory_path() / "strongbond_test_product.txt";
    ASSERT_EQ(run_cli("product --family km-pn --m 3 --n 4 > " + out.string() + " #"), 0);
    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "12");
}
