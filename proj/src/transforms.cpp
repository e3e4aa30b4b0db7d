#include "psombor/graph.hpp"

#include <algorithm>
#include <string>

namespace psombor {

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph subdivision(const Graph& g) {
    const std::size_t n = g.order();
    const auto original = g.edges();
    std::vector<Edge> edges;
    edges.reserve(2 * original.size());
    for (std::size_t k = 0; k < original.size(); ++k) {
        const auto mid = static_cast<Vertex>(n + k);
        edges.push_back({original[k].u, mid});
        edges.push_back({original[k].v, mid});
    }
    return Graph::from_edges(n + original.size(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::size_t> position(g.order(), g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            std::size_t j = position[w];
            if (j < g.order() && i < j) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    return Graph::from_edges(vertices.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const auto offset = static_cast<Vertex>(a.order());
    for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
    return Graph::from_edges(a.order() + b.order(), edges);
}

Graph shift_transform(const Graph& g, Edge uv) {
    const Vertex u = uv.u;
    const Vertex v = uv.v;
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
        throw GraphError("shift_transform: (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not an edge");
    }
    if (g.degree(u) < 2 || g.degree(v) < 2) {
        throw GraphError("shift_transform: edge is pendant");
    }
    const Edge key{std::min(u, v), std::max(u, v)};
    const auto bridges = cut_edges(g);
    const bool is_bridge = std::any_of(bridges.begin(), bridges.end(),
                                       [&](const CutEdge& c) { return c.edge == key; });
    if (!is_bridge) {
        throw GraphError("shift_transform: edge is not a cut edge");
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e == key) {
            edges.push_back(e);
            continue;
        }
        if (e.u == v || e.v == v) {
            // Bridge guarantees the moved neighbour is not already adjacent to u.
            Vertex z = e.u == v ? e.v : e.u;
            edges.push_back({u, z});
        } else {
            edges.push_back(e);
        }
    }
    return Graph::from_edges(g.order(), edges);
}

}  // namespace psombor
