#include "strongbond/oracles.hpp"

#include <string>

namespace strongbond::oracles {

namespace {

std::size_t sum_ceil_thirds(const StarlikeSpec& spec) {
    std::size_t total = 0;
    for (std::size_t n : spec.branches()) total += ceil_div(n, 3);
    return total;
}

}  // namespace

StarlikeResidueProfile residue_profile(const StarlikeSpec& spec) {
    StarlikeResidueProfile p;
    for (std::size_t n : spec.branches()) {
        switch (residue(n)) {
            case Residue::One: ++p.r; break;
            case Residue::Two: ++p.s; break;
            case Residue::Zero: ++p.t; break;
        }
    }
    return p;
}

std::size_t gamma_path(std::size_t n) {
    if (n == 0) throw std::domain_error("gamma_path requires n >= 1");
    return ceil_div(n, 3);
}

std::size_t gamma_km_pn(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::domain_error("gamma_km_pn requires m, n >= 1");
    return ceil_div(n, 3);
}

std::size_t bondage_complete(std::size_t m) {
    if (m < 2) throw std::domain_error("bondage_complete requires m >= 2");
    return ceil_div(m, 2);
}

std::size_t bondage_path(std::size_t n) {
    if (n < 2) throw std::domain_error("bondage_path requires n >= 2");
    return residue(n) == Residue::One ? 2 : 1;
}

std::size_t bondage_km_pn(std::size_t m, std::size_t n) {
    if (m == 0) throw std::domain_error("bondage_km_pn requires m >= 1");
    if (n < 2) throw std::domain_error("bondage_km_pn requires n >= 2");
    if (m == 1) return bondage_path(n);
    switch (residue(n)) {
        case Residue::Zero: return ceil_div(m, 2);
        case Residue::Two: return m;
        case Residue::One: return ceil_div(3 * m, 2);
    }
    return 0;
}

std::size_t gamma_starlike(const StarlikeSpec& spec) {
    const auto p = residue_profile(spec);
    const std::size_t base = sum_ceil_thirds(spec);
    if (p.r >= 1) return base - (p.r - 1);
    if (p.s >= 1) return base;
    return base + 1;
}

VertexSet starlike_canonical_dominating_set(const StarlikeSpec& spec) {
    const auto p = residue_profile(spec);
    VertexSet d(spec.order());
    if (p.r >= 1 || p.s == 0) d.insert(StarlikeSpec::center());
    for (std::size_t i = 1; i <= spec.branch_count(); ++i) {
        const std::size_t n = spec.branch_length(i);
        // Arithmetic progression x_start, x_{start+3}, ... stopping at or before x_n.
        std::size_t start = 0;
        switch (residue(n)) {
            case Residue::One: start = 3; break;
            case Residue::Two: start = 1; break;
            case Residue::Zero: start = 2; break;
        }
        for (std::size_t j = start; j <= n; j += 3) d.insert(spec.branch_vertex(i, j));
    }
    return d;
}

std::size_t bondage_km_starlike(std::size_t m, const StarlikeSpec& spec) {
    if (m == 0) throw std::domain_error("bondage_km_starlike requires m >= 1");
    if (spec.branch_count() < 2) {
        throw std::domain_error("bondage_km_starlike needs at least two branches; use bondage_km_pn for paths");
    }
    const auto p = residue_profile(spec);
    const std::size_t l = p.branch_count();
    if (p.r == l) return ceil_div(m, 2);
    if (p.s == l) return m;
    if (p.t == l) return ceil_div(3 * m, 2);
    throw std::domain_error("branch lengths of " + spec.to_string() +
                            " have mixed residues mod 3; no closed form is known");
}

BranchLowerBound sl_branch_lower_bounds(const StarlikeSpec& spec, std::size_t branch) {
    if (branch < 1 || branch > spec.branch_count()) throw std::domain_error("branch index out of range");
    const std::size_t n = spec.branch_length(branch);
    BranchLowerBound b;
    switch (residue(n)) {
        case Residue::One:
            b.bound = ceil_div(n, 3) - 1;
            b.augmented_bound = ceil_div(n, 3);
            break;
        case Residue::Two:
            b.bound = ceil_div(n, 3);
            break;
        case Residue::Zero:
            b.region = BranchLowerBound::Region::BranchWithoutFirst;
            b.bound = ceil_div(n, 3);
            break;
    }
    return b;
}

}  // namespace strongbond::oracles
