#include "psombor/graph.hpp"

#include <string>

namespace psombor {

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SeededRng::below: bound must be positive");
    // Reject the low sliver so that x % bound is exactly uniform. The engine
    // output sequence is fixed by the standard; std::uniform_int_distribution
    // is not, which is why it is avoided here.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw GraphError("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
    if (n == 0) throw GraphError("star requires n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<Vertex>(i)});
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    return Graph::from_edges(a + b, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > pairs) {
        throw GraphError("random_gnm: m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(pairs));
    }
    std::vector<Edge> all;
    all.reserve(pairs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});

    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    SeededRng rng(seed);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pick = k + static_cast<std::size_t>(rng.below(pairs - k));
        std::swap(all[k], all[pick]);
    }
    all.resize(m);
    return Graph::from_edges(n, all);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw GraphError("random_tree requires n >= 1");
    if (n <= 2) return path_graph(n);
    SeededRng rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // O(n) decoding with a moving pointer to the smallest leaf.
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = static_cast<Vertex>(ptr);
    for (Vertex c : code) {
        edges.push_back({leaf, c});
        if (--degree[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = static_cast<Vertex>(ptr);
        }
    }
    edges.push_back({leaf, static_cast<Vertex>(n - 1)});
    return Graph::from_edges(n, edges);
}

Graph generate(GraphKind kind, const GenerateParams& params) {
    if (params.n == 0 && kind != GraphKind::complete_bipartite) throw GraphError("generate: n must be >= 1");
    switch (kind) {
        case GraphKind::path: return path_graph(params.n);
        case GraphKind::cycle: return cycle_graph(params.n);
        case GraphKind::star: return star_graph(params.n);
        case GraphKind::complete: return complete_graph(params.n);
        case GraphKind::complete_bipartite:
            if (params.n == 0 || params.second == 0) throw GraphError("generate: both sides must be >= 1");
            return complete_bipartite_graph(params.n, params.second);
        case GraphKind::empty: return empty_graph(params.n);
        case GraphKind::random_gnm: return random_gnm(params.n, params.second, params.seed);
    }
    throw GraphError("generate: unknown kind");
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "star") return GraphKind::star;
    if (name == "complete") return GraphKind::complete;
    if (name == "complete_bipartite") return GraphKind::complete_bipartite;
    if (name == "empty") return GraphKind::empty;
    if (name == "random_gnm") return GraphKind::random_gnm;
    return std::nullopt;
}

}  // namespace psombor
