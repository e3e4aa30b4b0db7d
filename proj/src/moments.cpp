#include <cmath>
#include <algorithm>

#include "psombor/spectral.hpp"

namespace psombor {

MomentSet moments_closed_form(const Graph& g, double p) {
    if (p == 0.0) throw DomainError("spectral moments undefined for p = 0");
    const std::size_t n = g.order();
    const auto& d = g.degrees();

    // Weights aligned with each sorted neighbour list.
    std::vector<std::vector<double>> w(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j : g.neighbors(i)) {
            w[i].push_back(sombor_weight(static_cast<double>(d[i]), static_cast<double>(d[j]), p));
        }
    }
    auto weight = [&](Vertex i, Vertex j) {
        auto nb = g.neighbors(i);
        auto it = std::lower_bound(nb.begin(), nb.end(), j);
        return w[i][static_cast<std::size_t>(it - nb.begin())];
    };
    // Σ_{k ~ i, k ~ j} w_ik w_kj, i.e. the (i,j) entry of S_p^2 for i != j.
    auto two_walk = [&](Vertex i, Vertex j) {
        auto a = g.neighbors(i);
        auto b = g.neighbors(j);
        double s = 0.0;
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] < b[y]) {
                ++x;
            } else if (b[y] < a[x]) {
                ++y;
            } else {
                s += w[i][x] * w[j][y];
                ++x;
                ++y;
            }
        }
        return s;
    };

    MomentSet out;
    out.p = p;
    out.n[0] = static_cast<double>(n);
    out.n[1] = 0.0;

    double n2 = 0.0, n3 = 0.0;
    for (const Edge& e : g.edges()) {
        const double wij = weight(e.u, e.v);
        n2 += wij * wij;
        n3 += wij * two_walk(e.u, e.v);
    }
    out.n[2] = 2.0 * n2;
    out.n[3] = 2.0 * n3;

    double diag = 0.0;
    for (Vertex i = 0; i < n; ++i) {
        double row = 0.0;
        for (double x : w[i]) row += x * x;
        diag += row * row;
    }
    double off = 0.0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double t = two_walk(i, j);
            off += t * t;
        }
    }
    out.n[4] = diag + 2.0 * off;
    return out;
}

double moment_from_spectrum(const SpectralDecomposition& dec, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    double s = 0.0;
    for (double x : dec.values) {
        double term = 1.0;
        for (int i = 0; i < k; ++i) term *= x;
        s += term;
    }
    return s;
}

std::size_t two_path_count(const Graph& g) {
    std::size_t c = 0;
    for (std::size_t d : g.degrees()) c += d * (d - (d > 0 ? 1 : 0)) / 2;
    return c;
}

}  // namespace psombor
