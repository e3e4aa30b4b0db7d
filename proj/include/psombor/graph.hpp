#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psombor {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbor
// lists are kept sorted so that equality and adjacency tests are cheap.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Duplicate edges are merged. Self-loops and out-of-range ids throw GraphError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    const std::vector<std::size_t>& degrees() const { return degrees_; }

    bool adjacent(Vertex u, Vertex v) const;

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    std::size_t max_degree() const;
    std::size_t min_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::size_t> degrees_;
    std::size_t edge_count_ = 0;
};

/// Number of common neighbours of u and v.
std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

// ---- structure -------------------------------------------------------------

struct CutEdge {
    Edge edge;
    bool pendant = false;  // one endpoint has degree 1

    friend bool operator==(const CutEdge&, const CutEdge&) = default;
};

struct Bipartition {
    std::size_t first = 0;   // size of the side containing the lowest vertex of each component
    std::size_t second = 0;
};

struct StructureStats {
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    double average_degree = 0.0;
    // Max/min over edges of |N(u) ∩ N(v)|; empty when the graph has no edges.
    std::optional<std::size_t> t_max;
    std::optional<std::size_t> t_min;
    // Empty when the graph is disconnected.
    std::optional<std::size_t> diameter;
    bool is_connected = false;
    std::optional<Bipartition> bipartition;
    bool is_regular = false;
    std::vector<CutEdge> cut_edges;
};

StructureStats structure_stats(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
std::vector<CutEdge> cut_edges(const Graph& g);
// Eccentricity-based diameter; empty for disconnected graphs, 0 for n <= 1.
std::optional<std::size_t> diameter(const Graph& g);
bool is_regular(const Graph& g);

// Structural predicates used for equality cases.
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_complete_bipartite(const Graph& g);
// Complement is a disjoint union of cliques (K_n counts, with singleton parts).
bool is_complete_multipartite(const Graph& g);
// No two distinct vertices share two or more neighbours.
bool is_c4_free(const Graph& g);

// ---- constructions ---------------------------------------------------------

Graph complement(const Graph& g);
// Original vertices keep ids 0..n-1; the vertex subdividing the k-th edge of
// g.edges() gets id n+k.
Graph subdivision(const Graph& g);
// Induced subgraph relabelled to 0..k-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

// Moves every neighbour of v other than u onto u, leaving v pendant on u.
// uv must be a non-pendant bridge, otherwise GraphError.
Graph shift_transform(const Graph& g, Edge uv);

// ---- generators ------------------------------------------------------------

enum class GraphKind { path, cycle, star, complete, complete_bipartite, empty, random_gnm };

struct GenerateParams {
    std::size_t n = 0;
    std::size_t second = 0;  // b for complete_bipartite, m for random_gnm
    std::uint64_t seed = 0;
};

Graph generate(GraphKind kind, const GenerateParams& params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);  // K_{1,n-1}
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);
// Uniform simple graph with exactly m edges; see generators.cpp for the
// sampling procedure that keeps it identical across platforms.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);
// Uniform labelled tree from a random Prüfer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

std::optional<GraphKind> parse_graph_kind(std::string_view name);

// Uniform integer in [0, bound) drawn from mt19937_64 by rejection sampling.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed);
    std::uint64_t below(std::uint64_t bound);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// ---- text formats ----------------------------------------------------------

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
// Dispatches on extension: ".json" uses the JSON form, anything else the edge list.
Graph read_graph_file(const std::string& path);

}  // namespace psombor
