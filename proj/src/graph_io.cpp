#include "strongbond/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace strongbond {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
        if (pos > start) fields.push_back(s.substr(start, pos - start));
    }
    return fields;
}

std::optional<std::size_t> parse_count(std::string_view s) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

GraphParseError::GraphParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

Graph parse_graph_text(std::string_view text) {
    using Kind = GraphParseError::Kind;
    std::optional<Graph> g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split_fields(line);
        if (!g) {
            const auto order = fields.size() == 1 ? parse_count(fields[0]) : std::nullopt;
            if (!order) throw GraphParseError(Kind::MalformedLine, line_no, "expected vertex count");
            g.emplace(*order);
            continue;
        }
        const auto a = fields.size() == 2 ? parse_count(fields[0]) : std::nullopt;
        const auto b = fields.size() == 2 ? parse_count(fields[1]) : std::nullopt;
        if (!a || !b) throw GraphParseError(Kind::MalformedLine, line_no, "expected \"u v\"");
        if (*a >= g->order() || *b >= g->order()) {
            throw GraphParseError(Kind::OutOfRange, line_no, "endpoint out of range");
        }
        if (*a == *b) throw GraphParseError(Kind::SelfLoop, line_no, "self-loop");
        if (!g->add_edge(*a, *b)) throw GraphParseError(Kind::DuplicateEdge, line_no, "duplicate edge");
    }
    if (!g) throw GraphParseError(Kind::MissingHeader, line_no, "missing vertex count");
    return std::move(*g);
}

Graph parse_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    write_graph_text(out, g);
    return out.str();
}

}  // namespace strongbond
