#include "psombor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace psombor {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.order(), kUnseen);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnseen) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnseen; });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> colour(g.order(), -1);
    Bipartition sides;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<Vertex> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            (colour[u] == 0 ? sides.first : sides.second) += 1;
            for (Vertex w : g.neighbors(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    frontier.push(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return sides;
}

std::vector<CutEdge> cut_edges(const Graph& g) {
    // Iterative Tarjan low-link; recursion depth would otherwise be O(n).
    const std::size_t n = g.order();
    std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
    std::vector<CutEdge> bridges;
    std::size_t timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnseen) continue;
        std::vector<Frame> stack{{root, root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[w] == kUnseen) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Vertex p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) {
                        Edge e{std::min(p, done.v), std::max(p, done.v)};
                        bool pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
                        bridges.push_back({e, pendant});
                    }
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end(),
              [](const CutEdge& a, const CutEdge& b) { return a.edge < b.edge; });
    return bridges;
}

std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (std::size_t d : dist) {
            if (d == kUnseen) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_regular(const Graph& g) {
    return g.order() == 0 || g.max_degree() == g.min_degree();
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_edgeless(const Graph& g) { return g.size() == 0; }

bool is_complete_bipartite(const Graph& g) {
    if (g.size() == 0) return false;
    if (!is_connected(g)) return false;
    auto sides = bipartition(g);
    return sides && g.size() == sides->first * sides->second;
}

bool is_complete_multipartite(const Graph& g) {
    // Non-adjacency must be an equivalence relation: every complement
    // component is a clique.
    Graph co = complement(g);
    for (const auto& comp : connected_components(co)) {
        const std::size_t k = comp.size();
        std::size_t inner = 0;
        for (Vertex v : comp) inner += co.degree(v);
        if (inner != k * (k - 1)) return false;
    }
    return true;
}

bool is_c4_free(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (common_neighbor_count(g, i, j) >= 2) return false;
        }
    }
    return true;
}

StructureStats structure_stats(const Graph& g) {
    StructureStats s;
    s.max_degree = g.max_degree();
    s.min_degree = g.min_degree();
    s.average_degree = g.order() == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
    for (const Edge& e : g.edges()) {
        std::size_t t = common_neighbor_count(g, e.u, e.v);
        s.t_max = s.t_max ? std::max(*s.t_max, t) : t;
        s.t_min = s.t_min ? std::min(*s.t_min, t) : t;
    }
    s.is_connected = is_connected(g);
    s.diameter = s.is_connected ? diameter(g) : std::nullopt;
    s.bipartition = bipartition(g);
    s.is_regular = is_regular(g);
    s.cut_edges = cut_edges(g);
    return s;
}

}  // namespace psombor
