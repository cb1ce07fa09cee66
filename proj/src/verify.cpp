#include "strongbond/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "strongbond/bondage.hpp"
#include "strongbond/oracles.hpp"

namespace strongbond {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BondageOptions bondage_options(const VerifyConfig& config, Clock::time_point start) {
    BondageOptions opts;
    opts.jobs = config.search_jobs;
    opts.enumeration_cap = config.enumeration_cap;
    opts.max_size = config.max_size;
    if (config.budget_seconds > 0) opts.deadline = start + std::chrono::seconds(config.budget_seconds);
    return opts;
}

void verify_bondage(ReportEntry& e, const BuiltInstance& built, const VerifyConfig& config, Clock::time_point start) {
    const Graph& g = built.graph;
    const BondageOptions opts = bondage_options(config, start);
    std::optional<EdgeSet> witness;
    if (!config.full_search && e.formula_value) witness = constructive_bondage_set(e.instance, built);

    if (witness) {
        e.method = Method::WitnessRefutation;
        const std::size_t formula = *e.formula_value;
        if (formula - 1 > config.max_size) {
            e.status = EntryStatus::Skipped;
            e.note = "refutation size " + std::to_string(formula - 1) + " exceeds max-size " +
                     std::to_string(config.max_size);
            return;
        }
        const bool upper = witness->size() == formula && is_bondage_set(g, *witness);
        const bool lower = exhaustive_no_bondage_up_to(g, formula - 1, opts);
        if (upper && lower) {
            e.computed_value = formula;
            e.witness_edges = witness->edges();
            e.match = true;
            return;
        }
        e.note = std::string(upper ? "" : "constructive set is not a bondage set; ") +
                 (lower ? "" : "a smaller bondage set exists; ") + "value from full search";
        e.match = false;
        const BondageResult full = bondage_number(g, opts);
        e.computed_value = full.value;
        e.witness_edges = full.witness.edges();
        return;
    }

    e.method = Method::ExactSearch;
    const BondageResult full = bondage_number(g, opts);
    e.computed_value = full.value;
    e.witness_edges = full.witness.edges();
    e.match = !e.formula_value || *e.formula_value == full.value;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t count, const std::vector<std::size_t>& values) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (current.size() == count) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < values.size(); ++i) {
            current.push_back(values[i]);
            self(self, i);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string edge_list_text(const EdgeSet& z) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const Edge& e : z) {
        out << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    out << '}';
    return out.str();
}

template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(count, pool.size()));
    return pool;
}

}  // namespace

std::optional<std::size_t> formula_for(const InstanceSpec& spec, Quantity quantity) {
    try {
        switch (spec.family) {
            case Family::KmPn:
                if (quantity == Quantity::Gamma) return oracles::gamma_km_pn(spec.m, spec.n);
                if (spec.n < 2) return std::nullopt;
                return oracles::bondage_km_pn(spec.m, spec.n);
            case Family::KmStarlike: {
                const StarlikeSpec s(spec.branches);
                // γ(K_m ⊠ T) = γ(K_m) γ(T) = γ(T) for every tree T.
                if (quantity == Quantity::Gamma) return oracles::gamma_starlike(s);
                return oracles::bondage_km_starlike(spec.m, s);
            }
            case Family::Path:
                return quantity == Quantity::Gamma ? oracles::gamma_path(spec.n) : oracles::bondage_path(spec.n);
            case Family::Complete:
                if (spec.m == 0) return std::nullopt;
                return quantity == Quantity::Gamma ? std::size_t{1} : oracles::bondage_complete(spec.m);
            case Family::File: return std::nullopt;
        }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<EdgeSet> constructive_bondage_set(const InstanceSpec& spec, const BuiltInstance& built) {
    if (!built.indexing || !built.right_factor || spec.m < 2) return std::nullopt;
    const ProductIndexing& idx = *built.indexing;
    const Graph& right = *built.right_factor;

    if (spec.family == Family::KmPn) {
        if (spec.n < 2) return std::nullopt;
        switch (oracles::residue(spec.n)) {
            case oracles::Residue::Zero: return z_minus(idx, 1);
            case oracles::Residue::Two: return z_rungs(right, idx, 0, 1);
            case oracles::Residue::One: return pendant_bondage_set(right, idx, 0, 1);
        }
    }
    if (spec.family == Family::KmStarlike) {
        const StarlikeSpec s(spec.branches);
        if (s.branch_count() < 2) return std::nullopt;
        const auto p = oracles::residue_profile(s);
        const std::size_t n1 = s.branch_length(1);
        const Vertex leaf = s.branch_vertex(1, n1);
        const Vertex before_leaf = n1 >= 2 ? s.branch_vertex(1, n1 - 1) : StarlikeSpec::center();
        if (p.r == s.branch_count()) return z_minus(idx, StarlikeSpec::center());
        if (p.s == s.branch_count()) return z_rungs(right, idx, before_leaf, leaf);
        if (p.t == s.branch_count()) return pendant_bondage_set(right, idx, leaf, before_leaf);
    }
    return std::nullopt;
}

ReportEntry verify_instance(const InstanceSpec& spec, Quantity quantity, const VerifyConfig& config) {
    const auto start = Clock::now();
    ReportEntry e;
    e.instance = spec;
    e.quantity = quantity;
    try {
        const BuiltInstance built = build_instance(spec);
        e.formula_value = formula_for(spec, quantity);
        if (quantity == Quantity::Gamma) {
            const GammaResult r = domination_number(built.graph);
            e.method = Method::ExactSearch;
            e.computed_value = r.value;
            e.witness_vertices = r.witness.members();
            e.match = !e.formula_value || *e.formula_value == r.value;
        } else {
            verify_bondage(e, built, config, start);
        }
    } catch (const SearchBudgetExceeded& ex) {
        e.status = EntryStatus::Skipped;
        e.match = false;
        e.note = ex.what();
    } catch (const std::exception& ex) {
        e.status = EntryStatus::Error;
        e.match = false;
        e.note = ex.what();
    }
    e.elapsed_ms = ms_since(start);
    return e;
}

std::vector<InstanceSpec> expand_ranges(const SweepRanges& ranges) {
    std::vector<InstanceSpec> out;
    switch (ranges.family) {
        case Family::KmPn:
            for (std::size_t m : ranges.m_values) {
                for (std::size_t n : ranges.n_values) out.push_back(InstanceSpec::km_pn(m, n));
            }
            break;
        case Family::KmStarlike: {
            std::vector<std::size_t> lengths = ranges.branch_lengths;
            std::sort(lengths.begin(), lengths.end());
            lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
            for (std::size_t m : ranges.m_values) {
                for (std::size_t l : ranges.branch_counts) {
                    for (auto& b : multisets(l, lengths)) out.push_back(InstanceSpec::km_starlike(m, b));
                }
            }
            break;
        }
        case Family::Path:
            for (std::size_t n : ranges.n_values) out.push_back(InstanceSpec::path(n));
            break;
        case Family::Complete:
            for (std::size_t m : ranges.m_values) out.push_back(InstanceSpec::complete(m));
            break;
        case Family::File: throw std::invalid_argument("file family has no parameter ranges");
    }
    if (out.empty()) throw std::invalid_argument("sweep ranges are empty");
    std::sort(out.begin(), out.end(), instance_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> config_echo(const VerifyConfig& config) {
    std::vector<std::pair<std::string, std::string>> echo = {
        {"max_size", std::to_string(config.max_size)},
        {"budget_seconds", std::to_string(config.budget_seconds)},
        {"full_search", config.full_search ? "true" : "false"},
        {"enumeration_cap", std::to_string(config.enumeration_cap)},
    };
    if (config.seed) echo.emplace_back("seed", std::to_string(*config.seed));
    return echo;
}

Report sweep(const SweepRanges& ranges, const VerifyConfig& config) {
    return sweep(expand_ranges(ranges), ranges.quantity, config);
}

Report sweep(std::vector<InstanceSpec> instances, Quantity quantity, const VerifyConfig& config) {
    if (instances.empty()) throw std::invalid_argument("sweep has no instances");
    const auto start = Clock::now();
    std::sort(instances.begin(), instances.end(), instance_less);

    Report report;
    report.config = config_echo(config);
    report.config.emplace(report.config.begin(), "quantity", std::string(to_string(quantity)));
    report.entries.resize(instances.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
            report.entries[i] = verify_instance(instances[i], quantity, config);
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(instances.size())));
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    report.total_elapsed_ms = ms_since(start);
    return report;
}

std::string MdsStructureReport::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["gamma"] = gamma;
    j["mds_count"] = mds_count;
    j["passed"] = passed();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        list.push_back({{"lemma", v.lemma}, {"detail", v.detail}, {"mds", v.mds}});
    }
    j["violations"] = std::move(list);
    return j.dump(2) + "\n";
}

MdsStructureReport check_mds_structure(std::size_t m, std::size_t n, std::size_t cap) {
    if (m == 0 || n == 0) throw std::invalid_argument("check_mds_structure requires m, n >= 1");
    if (m * n > cap) throw EnumerationCapExceeded(m * n, cap);
    const auto product = strong_product(complete_graph(m), path_graph(n));
    const Graph& g = product.graph;
    const ProductIndexing& idx = product.indexing;

    MdsStructureReport report;
    report.m = m;
    report.n = n;
    report.gamma = domination_number(g).value;

    // γ(B_1^i) and γ(B_j^n), 1-based; computed on the blocks themselves.
    std::vector<std::size_t> prefix_gamma(n + 1, 0);
    std::vector<std::size_t> suffix_gamma(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        prefix_gamma[i] = domination_number(induced_subgraph(g, column_block(idx, 1, i)).graph).value;
        suffix_gamma[i] = domination_number(induced_subgraph(g, column_block(idx, i, n)).graph).value;
    }

    const auto all = enumerate_min_dominating_sets(g, cap);
    report.mds_count = all.size();
    for (const VertexSet& d : all) {
        auto fail = [&](std::string lemma, std::string detail) {
            report.violations.push_back({std::move(lemma), std::move(detail), d.members()});
        };
        std::vector<std::size_t> per_column(n + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) per_column[i] = d.intersection_size(idx.column(i));
        auto count = [&](std::size_t from, std::size_t to) {
            std::size_t c = 0;
            for (std::size_t i = from; i <= to; ++i) c += per_column[i];
            return c;
        };

        for (std::size_t i = 1; i <= n; ++i) {
            if (per_column[i] > 1) fail("v", "column " + std::to_string(i) + " holds " + std::to_string(per_column[i]));
        }
        if (n >= 2) {
            if (count(1, 2) != 1) fail("st", "columns 1-2 hold " + std::to_string(count(1, 2)));
            if (count(n - 1, n) != 1) {
                fail("st", "columns " + std::to_string(n - 1) + "-" + std::to_string(n) + " hold " +
                               std::to_string(count(n - 1, n)));
            }
        }
        for (std::size_t i = 2; i <= n; ++i) {
            if (count(1, i) < prefix_gamma[i - 1]) {
                fail("block-d", "|D ∩ B_1^" + std::to_string(i) + "| < γ(B_1^" + std::to_string(i - 1) + ")");
            }
        }
        for (std::size_t j = 1; j < n; ++j) {
            if (count(j, n) < suffix_gamma[j + 1]) {
                fail("block-d", "|D ∩ B_" + std::to_string(j) + "^n| < γ(B_" + std::to_string(j + 1) + "^n)");
            }
        }
        for (std::size_t i = 1; i <= n; ++i) {
            const bool forced_empty = (n % 3 == 0 && (i % 3 == 0 || i % 3 == 1)) || (n % 3 == 2 && i % 3 == 0);
            if (forced_empty && per_column[i] != 0) fail("block-0", "column " + std::to_string(i) + " is not empty");
        }
    }
    return report;
}

std::string_view to_string(BlockLemma lemma) {
    switch (lemma) {
        case BlockLemma::ThreeColumn: return "three-column block";
        case BlockLemma::TwoColumn: return "two-column block";
        case BlockLemma::Star: return "star product";
    }
    return "?";
}

BlockLemmaOutcome run_block_lemma_trials(BlockLemma lemma, std::size_t trials, std::mt19937_64& rng) {
    BlockLemmaOutcome outcome;
    outcome.lemma = lemma;
    std::uniform_int_distribution<std::size_t> pick_m(2, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = pick_m(rng);
        Graph g;
        VertexSet block;
        EdgeSet interior;
        std::string where;

        if (lemma == BlockLemma::Star) {
            const std::size_t leaves = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            auto p = strong_product(complete_graph(m), star_graph(leaves));
            block = VertexSet::full(p.graph.order());
            VertexSet leaf_columns(p.graph.order());
            for (std::size_t c = 2; c <= leaves + 1; ++c) leaf_columns |= p.indexing.column(c);
            const EdgeSet excluded = edges_within(p.graph, leaf_columns);
            for (const Edge& e : p.graph.edges()) {
                if (!excluded.contains(e)) interior.insert(e);
            }
            g = std::move(p.graph);
            where = "K" + std::to_string(m) + "xK1," + std::to_string(leaves);
        } else {
            const std::size_t span = lemma == BlockLemma::ThreeColumn ? 3 : 2;
            const std::size_t n = std::uniform_int_distribution<std::size_t>(span, 6)(rng);
            const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n - span + 1)(rng);
            const std::size_t j = i + span - 1;
            auto p = strong_product(complete_graph(m), path_graph(n));
            InteriorForm form = InteriorForm::ExcludeBothEnds;
            if (lemma == BlockLemma::TwoColumn) {
                form = unit(rng) < 0.5 ? InteriorForm::ExcludeLeft : InteriorForm::ExcludeRight;
            }
            block = column_block(p.indexing, i, j);
            interior = block_interior_edges(p.graph, p.indexing, i, j, form);
            g = std::move(p.graph);
            where = "K" + std::to_string(m) + "xP" + std::to_string(n) + " B_" + std::to_string(i) + "^" +
                    std::to_string(j);
        }

        const std::size_t limit = oracles::ceil_div(m, 2);
        const std::size_t from_interior = std::uniform_int_distribution<std::size_t>(0, limit - 1)(rng);
        EdgeSet z(sample(interior.edges(), from_interior, rng));
        const double density = unit(rng);
        for (const Edge& e : g.edges()) {
            if (!interior.contains(e) && unit(rng) < density) z.insert(e);
        }

        const Graph damaged = induced_subgraph(remove_edges(g, z), block).graph;
        ++outcome.trials;
        if (!find_dominating_set(damaged, 1)) {
            ++outcome.counterexamples;
            if (outcome.examples.size() < 5) outcome.examples.push_back(where + " Z=" + edge_list_text(z));
        }
    }
    return outcome;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("random_tree requires n >= 1");
    Graph t(n);
    if (n == 1) return t;
    if (n == 2) {
        t.add_edge(0, 1);
        return t;
    }
    std::uniform_int_distribution<Vertex> label(0, n - 1);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = label(rng);

    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    for (Vertex c : code) {
        const Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        t.add_edge(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    const Vertex a = *leaves.begin();
    const Vertex b = *std::next(leaves.begin());
    t.add_edge(a, b);
    return t;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (coin(rng)) g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace strongbond
