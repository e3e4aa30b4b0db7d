#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "psombor/graph.hpp"

namespace psombor::testing {

// Brute-force isomorphism over all vertex permutations; small graphs only.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    const auto edges = a.edges();
    do {
        bool ok = true;
        for (const Edge& e : edges) {
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph two_triangles_with_bridge() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
    return Graph::from_edges(6, edges);
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace psombor::testing
