#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strongbond/graph.hpp"

namespace strongbond {

// Text format: first non-comment line is the vertex count, every further
// non-comment line is "u v" with 0-based endpoints. Lines starting with '#'
// and blank lines are ignored.

class GraphParseError : public std::runtime_error {
public:
    enum class Kind { MissingHeader, MalformedLine, OutOfRange, SelfLoop, DuplicateEdge };

    GraphParseError(Kind kind, std::size_t line, const std::string& what);

    Kind kind() const { return kind_; }
    /// 1-based line number of the offending line.
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

Graph parse_graph_text(std::string_view text);
Graph parse_graph_file(const std::filesystem::path& path);

void write_graph_text(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

}  // namespace strongbond
