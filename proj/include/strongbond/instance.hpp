#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongbond/graph.hpp"
#include "strongbond/product.hpp"
#include "strongbond/starlike.hpp"

namespace strongbond {

enum class Family { KmPn, KmStarlike, Path, Complete, File };
enum class Quantity { Gamma, Bondage };

std::string_view to_string(Family f);
std::string_view to_string(Quantity q);
/// "km-pn", "km-starlike", "path", "complete", "file"
std::optional<Family> parse_family(std::string_view s);
std::optional<Quantity> parse_quantity(std::string_view s);

struct InstanceSpec {
    Family family = Family::KmPn;
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> branches;
    std::string graph_path;

    static InstanceSpec km_pn(std::size_t m, std::size_t n) { return {Family::KmPn, m, n, {}, {}}; }
    static InstanceSpec km_starlike(std::size_t m, std::vector<std::size_t> branches) {
        return {Family::KmStarlike, m, 0, std::move(branches), {}};
    }
    static InstanceSpec path(std::size_t n) { return {Family::Path, 0, n, {}, {}}; }
    static InstanceSpec complete(std::size_t m) { return {Family::Complete, m, 0, {}, {}}; }
    static InstanceSpec file(std::string path) { return {Family::File, 0, 0, {}, std::move(path)}; }

    /// Short human-readable name, e.g. "K3xP7", "K2xS(1,1)", "P5", "K4".
    std::string label() const;

    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// Parameter order used to sort sweep entries.
bool instance_less(const InstanceSpec& a, const InstanceSpec& b);

struct BuiltInstance {
    Graph graph;
    /// Present for the K_m ⊠ H families.
    std::optional<ProductIndexing> indexing;
    std::optional<Graph> right_factor;
};

/// Throws std::invalid_argument when the parameters are invalid for the family.
BuiltInstance build_instance(const InstanceSpec& spec);

}  // namespace strongbond
