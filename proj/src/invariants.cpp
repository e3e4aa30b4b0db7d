#include "psombor/invariants.hpp"

#include <cmath>

#include "psombor/tolerances.hpp"

namespace psombor {

double sombor_index(const Graph& g, double p) {
    if (p == 0.0) throw DomainError("p-Sombor index undefined for p = 0");
    const auto& d = g.degrees();
    double s = 0.0;
    for (const Edge& e : g.edges()) {
        s += sombor_weight(static_cast<double>(d[e.u]), static_cast<double>(d[e.v]), p);
    }
    return s;
}

IndexBundle classical_indices(const Graph& g) {
    IndexBundle b;
    const auto& d = g.degrees();
    for (std::size_t x : d) b.m1 += static_cast<double>(x * x);
    for (const Edge& e : g.edges()) {
        const double du = static_cast<double>(d[e.u]);
        const double dv = static_cast<double>(d[e.v]);
        b.isi += du * dv / (du + dv);
        b.randic += 1.0 / std::sqrt(du * dv);
    }
    return b;
}

std::optional<double> weight_variance(const Graph& g, double p) {
    if (p == 0.0) throw DomainError("p-Sombor weights undefined for p = 0");
    const std::size_t m = g.size();
    if (m == 0) return std::nullopt;
    const auto& d = g.degrees();
    double sum = 0.0;
    std::vector<double> w;
    w.reserve(m);
    for (const Edge& e : g.edges()) {
        w.push_back(sombor_weight(static_cast<double>(d[e.u]), static_cast<double>(d[e.v]), p));
        sum += w.back();
    }
    // Two-pass form: mean first, then squared deviations.
    const double mean = sum / static_cast<double>(m);
    double var = 0.0;
    for (double x : w) var += (x - mean) * (x - mean);
    return var / static_cast<double>(m);
}

IndexBundle index_bundle(const Graph& g, double p) {
    IndexBundle b = classical_indices(g);
    b.p = p;
    b.so_p = sombor_index(g, p);
    b.sigma_sq = weight_variance(g, p);
    return b;
}

SpectralInvariants spectral_invariants(const SpectralDecomposition& dec) {
    SpectralInvariants s;
    if (dec.values.empty()) return s;
    s.radius = dec.largest();
    s.spread = dec.largest() - dec.smallest();
    for (double x : dec.values) {
        s.energy += std::abs(x);
        s.estrada += std::exp(x);
    }
    s.abs_det = abs_determinant(dec);
    s.estrada_overflow_risk = s.radius > tol::estrada_overflow_warning;
    return s;
}

}  // namespace psombor
