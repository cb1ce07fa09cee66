#include "strongbond/bondage.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "domination_search.hpp"

namespace strongbond {

namespace {

std::size_t gamma_value(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("domination number of the empty graph");
    std::size_t k = 1;
    while (!find_dominating_set(g, k)) ++k;
    return k;
}

// Non-D endpoint of e when exactly one endpoint lies in D.
std::optional<Vertex> exposed_endpoint(const VertexSet& d, const Edge& e) {
    const bool in_u = d.contains(e.u);
    const bool in_v = d.contains(e.v);
    if (in_u == in_v) return std::nullopt;
    return in_u ? e.v : e.u;
}

// Does D (a dominating set of g) still dominate g - z?
bool dominates_after_removal(const Graph& g, const VertexSet& d, std::span<const Edge> z) {
    for (const Edge& e : z) {
        const auto w = exposed_endpoint(d, e);
        if (!w) continue;
        VertexSet reach = g.neighbors(*w) & d;
        for (const Edge& f : z) {
            if (f.u == *w) reach.erase(f.v);
            if (f.v == *w) reach.erase(f.u);
        }
        if (reach.empty()) return false;
    }
    return true;
}

class SubsetSearch {
public:
    SubsetSearch(const Graph& g, const DominatingSetPool& pool, const BondageOptions& options)
        : graph_(g), edges_(g.edges()), pool_(pool), options_(options) {}

    /// Lexicographically first bondage set of size exactly k over the sorted edge list.
    std::optional<EdgeSet> first_bondage_set(std::size_t k) {
        const std::size_t m = edges_.size();
        if (k == 0 || k > m) return std::nullopt;
        const std::size_t last_first = m - k;

        std::vector<std::optional<std::vector<std::size_t>>> found(last_first + 1);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
        std::atomic<bool> abort{false};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto work = [&] {
            Worker w;
            w.abort = &abort;
            w.best = &best;
            try {
                while (!abort.load()) {
                    const std::size_t first = next.fetch_add(1);
                    if (first > last_first || first > best.load()) break;
                    w.current_first = first;
                    w.superseded = false;
                    w.z.assign(1, edges_[first]);
                    w.picked.assign(1, first);
                    if (dfs(w, 1, first + 1, k)) {
                        found[first] = w.picked;
                        std::size_t seen = best.load();
                        while (first < seen && !best.compare_exchange_weak(seen, first)) {
                        }
                    }
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                abort = true;
            }
        };

        const unsigned jobs = std::max(1U, options_.jobs);
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::thread> threads;
            for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work);
            for (auto& t : threads) t.join();
        }
        if (failure) std::rethrow_exception(failure);

        const std::size_t winner = best.load();
        if (winner > last_first) return std::nullopt;
        EdgeSet out;
        for (std::size_t i : *found[winner]) out.insert(edges_[i]);
        return out;
    }

private:
    struct Worker {
        std::vector<Edge> z;
        std::vector<std::size_t> picked;
        std::size_t current_first = 0;
        std::size_t hint = 0;
        std::size_t leaves = 0;
        bool superseded = false;
        std::vector<VertexSet> extras;
        std::atomic<bool>* abort = nullptr;
        std::atomic<std::size_t>* best = nullptr;
    };

    // Subsets are visited in lexicographic order of their sorted index lists.
    bool dfs(Worker& w, std::size_t depth, std::size_t start, std::size_t k) {
        if (depth == k) return leaf_is_bondage(w);
        const std::size_t stop = edges_.size() - (k - depth);
        for (std::size_t i = start; i <= stop; ++i) {
            w.z.push_back(edges_[i]);
            w.picked.push_back(i);
            const bool hit = dfs(w, depth + 1, i + 1, k);
            if (hit) return true;
            w.z.pop_back();
            w.picked.pop_back();
            if (w.superseded || w.abort->load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    bool leaf_is_bondage(Worker& w) {
        if ((++w.leaves & 0xFFF) == 0) {
            if (w.best->load(std::memory_order_relaxed) < w.current_first) w.superseded = true;
            if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
                throw SearchBudgetExceeded("bondage search deadline exceeded");
            }
        }
        const std::span<const Edge> z(w.z);
        if (!pool_.sets().empty() && pool_.survives(w.hint, z)) return false;
        for (std::size_t i = 0; i < pool_.sets().size(); ++i) {
            if (pool_.survives(i, z)) {
                w.hint = i;
                return false;
            }
        }
        for (const VertexSet& d : w.extras) {
            if (dominates_after_removal(graph_, d, z)) return false;
        }
        // Filter survivor: confirm exactly.
        Graph damaged = graph_;
        for (const Edge& e : z) damaged.remove_edge(e.u, e.v);
        detail::DominationSearch search(damaged);
        std::vector<Vertex> witness;
        const std::size_t n = graph_.order();
        if (search.search_any(pool_.gamma(), VertexSet(n), VertexSet::full(n), &witness)) {
            w.extras.emplace_back(n, std::span<const Vertex>(witness));
            return false;
        }
        return true;
    }

    const Graph& graph_;
    std::vector<Edge> edges_;
    const DominatingSetPool& pool_;
    const BondageOptions& options_;
};

}  // namespace

DominatingSetPool::DominatingSetPool(const Graph& g, std::size_t gamma, const BondageOptions& options)
    : gamma_(gamma), complete_(g.order() <= options.enumeration_cap), order_(g.order()) {
    if (complete_) {
        sets_ = collect_min_dominating_sets(g, gamma, std::numeric_limits<std::size_t>::max());
        std::sort(sets_.begin(), sets_.end(), lex_less);
    } else {
        sets_ = collect_min_dominating_sets(g, gamma, options.pool_limit);
    }
    cover_.assign(sets_.size() * order_, 0);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (Vertex w = 0; w < order_; ++w) {
            cover_[i * order_ + w] = static_cast<std::uint16_t>(g.closed_neighborhood(w).intersection_size(sets_[i]));
        }
    }
}

bool DominatingSetPool::survives(std::size_t index, std::span<const Edge> z) const {
    const VertexSet& d = sets_[index];
    const std::uint16_t* cover = &cover_[index * order_];
    for (std::size_t j = 0; j < z.size(); ++j) {
        const auto w = exposed_endpoint(d, z[j]);
        if (!w) continue;
        std::uint16_t lost = 0;
        for (const Edge& f : z) {
            const auto other = exposed_endpoint(d, f);
            if (other && *other == *w) ++lost;
        }
        if (cover[*w] <= lost) return false;
    }
    return true;
}

bool DominatingSetPool::rejects(std::span<const Edge> z) const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (survives(i, z)) return true;
    }
    return false;
}

bool is_bondage_set(const Graph& g, const EdgeSet& z) {
    const Graph damaged = remove_edges(g, z);
    if (z.empty()) return false;
    const std::size_t gamma = gamma_value(g);
    return !find_dominating_set(damaged, gamma);
}

BondageResult bondage_number(const Graph& g, const BondageOptions& options) {
    if (g.edge_count() == 0) throw NoBondageSet();
    const std::size_t gamma = gamma_value(g);
    const DominatingSetPool pool(g, gamma, options);
    SubsetSearch search(g, pool, options);
    // Removing every edge leaves γ = order > γ(G), so the loop terminates.
    for (std::size_t k = 1; k <= g.edge_count(); ++k) {
        if (k > options.max_size) {
            throw SearchBudgetExceeded("bondage search exceeded subset size cap " + std::to_string(options.max_size));
        }
        if (auto z = search.first_bondage_set(k)) return {k, std::move(*z)};
    }
    throw std::logic_error("bondage search exhausted all edge subsets");
}

bool exhaustive_no_bondage_up_to(const Graph& g, std::size_t k, const BondageOptions& options) {
    if (k == 0 || g.edge_count() == 0) return true;
    const std::size_t gamma = gamma_value(g);
    const DominatingSetPool pool(g, gamma, options);
    SubsetSearch search(g, pool, options);
    // γ(G - Z) is monotone in Z, so a bondage set of size <= k exists iff one
    // of size exactly min(k, |E|) does.
    return !search.first_bondage_set(std::min(k, g.edge_count()));
}

EdgeSet z_minus(const ProductIndexing& idx, Vertex v) {
    const std::size_t m = idx.left_order();
    if (m < 2) throw std::invalid_argument("z_minus requires m >= 2");
    if (v >= idx.right_order()) throw std::out_of_range("right-factor vertex out of range");
    EdgeSet z;
    for (Vertex g = 0; g + 1 < m; g += 2) z.insert(Edge(idx.index(g, v), idx.index(g + 1, v)));
    if (m % 2 == 1) z.insert(Edge(idx.index(m - 2, v), idx.index(m - 1, v)));
    return z;
}

EdgeSet z_rungs(const Graph& right_factor, const ProductIndexing& idx, Vertex x, Vertex y) {
    if (right_factor.order() != idx.right_order()) throw std::invalid_argument("right factor does not match indexing");
    if (x >= right_factor.order() || y >= right_factor.order() || !right_factor.adjacent(x, y)) {
        throw std::invalid_argument("z_rungs requires xy to be an edge of the right factor");
    }
    EdgeSet z;
    for (Vertex g = 0; g < idx.left_order(); ++g) z.insert(Edge(idx.index(g, x), idx.index(g, y)));
    return z;
}

EdgeSet pendant_bondage_set(const Graph& right_factor, const ProductIndexing& idx, Vertex s0, Vertex t0) {
    if (s0 >= right_factor.order() || right_factor.degree(s0) != 1) {
        throw std::invalid_argument("pendant_bondage_set requires s0 of degree one");
    }
    EdgeSet z = z_minus(idx, s0);
    z |= z_rungs(right_factor, idx, s0, t0);
    return z;
}

}  // namespace strongbond
