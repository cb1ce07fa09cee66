// Command-line front end: single-instance solvers, verification sweeps and
// the MDS / block-lemma property suites.

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongbond/bondage.hpp"
#include "strongbond/domination.hpp"
#include "strongbond/graph_io.hpp"
#include "strongbond/instance.hpp"
#include "strongbond/report.hpp"
#include "strongbond/verify.hpp"

using namespace strongbond;

namespace {

struct Options {
    std::string family = "km-pn";
    std::string quantity = "bondage";
    std::string m = "2";
    std::string n = "3";
    std::string branches;
    std::string branch_counts = "2,3";
    std::string lengths = "1..4";
    std::string graph;
    std::size_t max_size = 8;
    unsigned jobs = 1;
    std::size_t budget_seconds = 0;
    bool json = false;
    bool full_search = false;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1000;
};

// "3", "1..5" or "1,2,7" (items may themselves be ranges).
std::vector<std::size_t> parse_values(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dots = item.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument("bad number: " + item);
            continue;
        }
        const std::size_t lo = std::stoul(item.substr(0, dots));
        const std::size_t hi = std::stoul(item.substr(dots + 2));
        for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty value list: '" + text + "'");
    return out;
}

std::size_t single_value(const std::string& text, const char* name) {
    const auto v = parse_values(text);
    if (v.size() != 1) throw std::invalid_argument(std::string("--") + name + " takes one value here");
    return v.front();
}

Family family_of(const Options& o) {
    auto f = parse_family(o.family);
    if (!f) throw std::invalid_argument("unknown family: " + o.family);
    return *f;
}

InstanceSpec instance_of(const Options& o) {
    switch (family_of(o)) {
        case Family::KmPn: return InstanceSpec::km_pn(single_value(o.m, "m"), single_value(o.n, "n"));
        case Family::KmStarlike:
            if (o.branches.empty()) throw std::invalid_argument("km-starlike needs --branches");
            return InstanceSpec::km_starlike(single_value(o.m, "m"), parse_values(o.branches));
        case Family::Path: return InstanceSpec::path(single_value(o.n, "n"));
        case Family::Complete: return InstanceSpec::complete(single_value(o.m, "m"));
        case Family::File:
            if (o.graph.empty()) throw std::invalid_argument("file family needs --graph");
            return InstanceSpec::file(o.graph);
    }
    throw std::invalid_argument("unknown family");
}

Quantity quantity_of(const Options& o) {
    auto q = parse_quantity(o.quantity);
    if (!q) throw std::invalid_argument("unknown quantity: " + o.quantity);
    return *q;
}

VerifyConfig config_of(const Options& o) {
    VerifyConfig c;
    c.max_size = o.max_size;
    c.budget_seconds = o.budget_seconds;
    c.jobs = o.jobs;
    c.full_search = o.full_search;
    c.seed = o.seed;
    return c;
}

int print_report(const Report& report, const Options& o) {
    std::cout << emit_report(report, o.json ? ReportFormat::Json : ReportFormat::TextTable);
    return report.all_passed() ? 0 : 1;
}

std::string vertices_text(const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

int run_gamma(const Options& o) {
    const InstanceSpec spec = instance_of(o);
    const auto r = domination_number(build_instance(spec).graph);
    if (o.json) {
        nlohmann::ordered_json j;
        j["instance"] = spec.label();
        j["gamma"] = r.value;
        j["witness"] = r.witness.members();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << spec.label() << " gamma=" << r.value << " witness=" << vertices_text(r.witness.members())
                  << '\n';
    }
    return 0;
}

int run_bondage(const Options& o) {
    const InstanceSpec spec = instance_of(o);
    BondageOptions opts;
    opts.jobs = o.jobs;
    opts.max_size = o.max_size;
    if (o.budget_seconds > 0) {
        opts.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(o.budget_seconds);
    }
    const BondageResult r = bondage_number(build_instance(spec).graph, opts);
    if (o.json) {
        nlohmann::ordered_json j;
        j["instance"] = spec.label();
        j["bondage"] = r.value;
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const Edge& e : r.witness) w.push_back({e.u, e.v});
        j["witness"] = std::move(w);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << spec.label() << " bondage=" << r.value << " witness={";
        bool first = true;
        for (const Edge& e : r.witness) {
            std::cout << (first ? "" : ",") << e.u << '-' << e.v;
            first = false;
        }
        std::cout << "}\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    VerifyConfig config = config_of(o);
    config.search_jobs = o.jobs;
    const Quantity q = quantity_of(o);
    Report report;
    report.config = config_echo(config);
    report.config.emplace(report.config.begin(), "quantity", std::string(to_string(q)));
    report.entries.push_back(verify_instance(instance_of(o), q, config));
    report.total_elapsed_ms = report.entries.back().elapsed_ms;
    return print_report(report, o);
}

int run_sweep(const Options& o) {
    SweepRanges ranges;
    ranges.family = family_of(o);
    ranges.quantity = quantity_of(o);
    if (ranges.family == Family::File) {
        return print_report(sweep({InstanceSpec::file(o.graph)}, ranges.quantity, config_of(o)), o);
    }
    if (ranges.family != Family::Path) ranges.m_values = parse_values(o.m);
    if (ranges.family == Family::KmPn || ranges.family == Family::Path) ranges.n_values = parse_values(o.n);
    if (ranges.family == Family::KmStarlike) {
        ranges.branch_counts = parse_values(o.branch_counts);
        ranges.branch_lengths = parse_values(o.lengths);
    }
    return print_report(sweep(ranges, config_of(o)), o);
}

int run_mds_check(const Options& o) {
    bool ok = true;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (std::size_t m : parse_values(o.m)) {
        for (std::size_t n : parse_values(o.n)) {
            const auto r = check_mds_structure(m, n);
            ok = ok && r.passed();
            if (o.json) {
                all.push_back(nlohmann::ordered_json::parse(r.to_json()));
                continue;
            }
            std::cout << "K" << m << "xP" << n << " gamma=" << r.gamma << " mds=" << r.mds_count
                      << (r.passed() ? " ok" : " VIOLATED") << '\n';
            for (const auto& v : r.violations) {
                std::cout << "  [" << v.lemma << "] " << v.detail << " in " << vertices_text(v.mds) << '\n';
            }
        }
    }
    if (o.json) std::cout << all.dump(2) << '\n';
    return ok ? 0 : 1;
}

int run_product(const Options& o) {
    const InstanceSpec spec = instance_of(o);
    write_graph_text(std::cout, build_instance(spec).graph);
    return 0;
}

int run_block_lemmas(const Options& o) {
    std::mt19937_64 rng(o.seed.value_or(1));
    bool ok = true;
    for (BlockLemma lemma : {BlockLemma::ThreeColumn, BlockLemma::TwoColumn, BlockLemma::Star}) {
        const auto r = run_block_lemma_trials(lemma, o.trials, rng);
        ok = ok && r.counterexamples == 0;
        std::cout << to_string(lemma) << ": trials=" << r.trials << " counterexamples=" << r.counterexamples << '\n';
        for (const auto& ex : r.examples) std::cout << "  " << ex << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination and bondage numbers of strong products"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "km-pn | km-starlike | path | complete | file")->capture_default_str();
        sub->add_option("--m", o.m, "size of K_m; sweeps accept 1..4 or 1,2,3")->capture_default_str();
        sub->add_option("--n", o.n, "path order; sweeps accept ranges")->capture_default_str();
        sub->add_option("--branches", o.branches, "starlike branch lengths a,b,c");
        sub->add_option("--graph", o.graph, "graph file (first line: vertex count, then 'u v' per edge)");
        sub->add_option("--max-size", o.max_size, "largest edge subset a bondage search enumerates")
            ->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", o.budget_seconds, "per-instance budget, 0 = none")->capture_default_str();
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--full-search", o.full_search, "bondage_number instead of witness + refutation");
        sub->add_option("--seed", o.seed, "seed for randomized suites");
    };
    auto add_quantity = [&](CLI::App* sub) {
        sub->add_option("--quantity", o.quantity, "gamma | bondage")->capture_default_str();
    };

    auto* gamma = app.add_subcommand("gamma", "domination number and lex-least MDS");
    auto* bondage = app.add_subcommand("bondage", "bondage number and lex-least bondage set");
    auto* verify = app.add_subcommand("verify", "check one instance against its closed form");
    auto* sweep_cmd = app.add_subcommand("sweep", "verify every instance in a parameter range");
    auto* mds = app.add_subcommand("mds-check", "column lemmas on every MDS of K_m x P_n");
    auto* product = app.add_subcommand("product", "print the product graph in the text format");
    auto* lemmas = app.add_subcommand("block-lemmas", "randomized block-lemma trials");
    for (auto* sub : {gamma, bondage, verify, sweep_cmd, mds, product, lemmas}) add_common(sub);
    add_quantity(verify);
    add_quantity(sweep_cmd);
    sweep_cmd->add_option("--branch-counts", o.branch_counts, "starlike sweep: branch counts")->capture_default_str();
    sweep_cmd->add_option("--lengths", o.lengths, "starlike sweep: branch lengths")->capture_default_str();
    lemmas->add_option("--trials", o.trials, "trials per lemma")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gamma) return run_gamma(o);
        if (*bondage) return run_bondage(o);
        if (*verify) return run_verify(o);
        if (*sweep_cmd) return run_sweep(o);
        if (*mds) return run_mds_check(o);
        if (*product) return run_product(o);
        if (*lemmas) return run_block_lemmas(o);
    } catch (const GraphParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
