#include "psombor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace psombor {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || token.empty()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    if (value > 0xFFFFFFFEu) throw ParseError(line, "vertex id out of range");
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::optional<std::size_t> declared_n;
    std::vector<Edge> edges;
    std::size_t max_id_plus_one = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("n=") || line.starts_with("n =")) {
            auto eq = line.find('=');
            if (declared_n) throw ParseError(line_no, "duplicate n= header");
            if (!edges.empty()) throw ParseError(line_no, "n= header must precede edges");
            declared_n = parse_index(trim(line.substr(eq + 1)), line_no);
            continue;
        }

        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            auto start = line.find_first_not_of(" \t", pos);
            if (start == std::string_view::npos) break;
            auto stop = line.find_first_of(" \t", start);
            if (stop == std::string_view::npos) stop = line.size();
            tokens.push_back(line.substr(start, stop - start));
            pos = stop;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(tokens.size()) + " tokens");
        }
        const std::size_t u = parse_index(tokens[0], line_no);
        const std::size_t v = parse_index(tokens[1], line_no);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    }
    std::size_t n = max_id_plus_one;
    if (declared_n) {
        if (*declared_n < max_id_plus_one) {
            throw ParseError(line_no, "n=" + std::to_string(*declared_n) + " is smaller than the largest vertex id + 1");
        }
        n = *declared_n;
    }
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n=" << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace psombor
