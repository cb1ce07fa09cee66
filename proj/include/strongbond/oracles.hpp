#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "strongbond/starlike.hpp"
#include "strongbond/vertex_set.hpp"

// Closed-form domination and bondage values. All functions are total over
// their documented domain and throw std::domain_error outside it. Integer
// arithmetic only.
namespace strongbond::oracles {

/// n mod 3, the case split used throughout.
enum class Residue { Zero = 0, One = 1, Two = 2 };

constexpr Residue residue(std::size_t n) { return static_cast<Residue>(n % 3); }

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Branch counts by residue: r ≡ 1, s ≡ 2, t ≡ 0 (mod 3).
struct StarlikeResidueProfile {
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t t = 0;

    std::size_t branch_count() const { return r + s + t; }
};

StarlikeResidueProfile residue_profile(const StarlikeSpec& spec);

/// γ(P_n) = ⌈n/3⌉, n >= 1.
std::size_t gamma_path(std::size_t n);

/// γ(K_m ⊠ P_n) = ⌈n/3⌉, m, n >= 1.
std::size_t gamma_km_pn(std::size_t m, std::size_t n);

/// b(K_m) = ⌈m/2⌉, m >= 2.
std::size_t bondage_complete(std::size_t m);

/// b(P_n) = 2 if n ≡ 1 (mod 3), else 1; n >= 2.
std::size_t bondage_path(std::size_t n);

/// b(K_m ⊠ P_n): ⌈m/2⌉, m, ⌈3m/2⌉ for n ≡ 0, 2, 1 (mod 3); m >= 1, n >= 2.
std::size_t bondage_km_pn(std::size_t m, std::size_t n);

/// γ of a starlike tree from its residue profile.
std::size_t gamma_starlike(const StarlikeSpec& spec);

/// The explicit dominating set D_0 of size gamma_starlike(spec), labeled as
/// in starlike_tree(spec).
VertexSet starlike_canonical_dominating_set(const StarlikeSpec& spec);

/// b(K_m ⊠ S) for starlike S with at least two branches, all of one residue:
/// ⌈m/2⌉, m, ⌈3m/2⌉ for common residue 1, 2, 0. Mixed residues are outside the
/// known result and throw std::domain_error.
std::size_t bondage_km_starlike(std::size_t m, const StarlikeSpec& spec);

/// Lower bounds on |D ∩ region| that hold for every dominating set D of a
/// starlike tree, for branch i (1-based).
struct BranchLowerBound {
    enum class Region {
        Branch,                  ///< V(P_{n_i})
        BranchWithoutFirst,      ///< V(P_{n_i}) - x^i_1
    };
    Region region = Region::Branch;
    std::size_t bound = 0;
    /// Bound on the augmented branch (branch plus center); only for n_i ≡ 1.
    std::optional<std::size_t> augmented_bound;
};

BranchLowerBound sl_branch_lower_bounds(const StarlikeSpec& spec, std::size_t branch);

}  // namespace strongbond::oracles
