#include "strongbond/instance.hpp"

#include <stdexcept>
#include <tuple>

#include "strongbond/graph_io.hpp"

namespace strongbond {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::KmPn: return "km-pn";
        case Family::KmStarlike: return "km-starlike";
        case Family::Path: return "path";
        case Family::Complete: return "complete";
        case Family::File: return "file";
    }
    return "?";
}

std::string_view to_string(Quantity q) { return q == Quantity::Gamma ? "gamma" : "bondage"; }

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::KmPn, Family::KmStarlike, Family::Path, Family::Complete, Family::File}) {
        if (s == to_string(f)) return f;
    }
    return std::nullopt;
}

std::optional<Quantity> parse_quantity(std::string_view s) {
    if (s == "gamma") return Quantity::Gamma;
    if (s == "bondage") return Quantity::Bondage;
    return std::nullopt;
}

std::string InstanceSpec::label() const {
    switch (family) {
        case Family::KmPn: return "K" + std::to_string(m) + "xP" + std::to_string(n);
        case Family::KmStarlike: {
            std::string s = "K" + std::to_string(m) + "xS(";
            for (std::size_t i = 0; i < branches.size(); ++i) s += (i ? "," : "") + std::to_string(branches[i]);
            return s + ")";
        }
        case Family::Path: return "P" + std::to_string(n);
        case Family::Complete: return "K" + std::to_string(m);
        case Family::File: return "file:" + graph_path;
    }
    return "?";
}

bool instance_less(const InstanceSpec& a, const InstanceSpec& b) {
    return std::tie(a.family, a.m, a.n, a.branches, a.graph_path) <
           std::tie(b.family, b.m, b.n, b.branches, b.graph_path);
}

BuiltInstance build_instance(const InstanceSpec& spec) {
    switch (spec.family) {
        case Family::KmPn: {
            if (spec.m == 0 || spec.n == 0) throw std::invalid_argument("km-pn requires m, n >= 1");
            Graph right = path_graph(spec.n);
            auto p = strong_product(complete_graph(spec.m), right);
            return {std::move(p.graph), p.indexing, std::move(right)};
        }
        case Family::KmStarlike: {
            if (spec.m == 0) throw std::invalid_argument("km-starlike requires m >= 1");
            Graph right = starlike_tree(StarlikeSpec(spec.branches));
            auto p = strong_product(complete_graph(spec.m), right);
            return {std::move(p.graph), p.indexing, std::move(right)};
        }
        case Family::Path:
            if (spec.n == 0) throw std::invalid_argument("path requires n >= 1");
            return {path_graph(spec.n), std::nullopt, std::nullopt};
        case Family::Complete:
            if (spec.m == 0) throw std::invalid_argument("complete requires m >= 1");
            return {complete_graph(spec.m), std::nullopt, std::nullopt};
        case Family::File:
            return {parse_graph_file(spec.graph_path), std::nullopt, std::nullopt};
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace strongbond
