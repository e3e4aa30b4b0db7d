#include "psombor/graph.hpp"

#include <algorithm>
#include <string>

namespace psombor {

Graph::Graph(std::size_t n) : adjacency_(n), degrees_(n, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") references a vertex outside 0.." + std::to_string(n) + "-1");
        }
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.degrees_[v] = nb.size();
        twice_m += nb.size();
    }
    g.edge_count_ = twice_m / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::size_t Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace psombor
