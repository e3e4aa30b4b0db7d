#include <cmath>

#include "bounds_detail.hpp"

namespace psombor {

using detail::CheckSpec;
using detail::evaluate;
using detail::not_applicable;
using detail::pow2;

std::vector<BoundReport> check_radius_bounds(const GraphAnalysis& a, const BoundOptions& opt) {
    static const CheckSpec adjacency{"radius.adjacency_sandwich",
                                     "2^(1/p) delta mu1 <= xi1 <= 2^(1/p) Delta mu1"};
    static const CheckSpec edge_count{"radius.edge_count",
                                      "2^(1+1/p) (m/n) delta <= xi1 <= 2^(1/p) sqrt(2m-n+1) Delta"};
    static const CheckSpec zagreb{"radius.zagreb", "2^(1/p) sqrt(M1/n) delta <= xi1 <= 2^(1/p) Delta^2"};
    static const CheckSpec average{"radius.average_degree", "xi1 >= 2^(1/p) delta dbar"};
    static const CheckSpec randic{"radius.randic", "xi1 >= 2^(1/p) (delta/m) R", PDomain::never};
    static const CheckSpec distinct{"radius.distinct_vs_diameter", "distinct eigenvalues >= diameter + 1"};
    static const CheckSpec n2_upper{"radius.n2_upper", "xi1 <= sqrt((n-1) N2 / n)"};
    static const CheckSpec spread{"radius.spread", "xi1 - xi_n <= sqrt(2 N2)"};

    const Graph& g = a.graph();
    const double p = a.p();
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double D = static_cast<double>(a.stats().max_degree);
    const double dl = static_cast<double>(a.stats().min_degree);
    const bool regular = a.stats().is_regular;
    const bool connected = a.stats().is_connected;
    const double n2 = a.moments()[2];
    const double xi1 = a.invariants().radius;
    const double mu1 = a.adjacency().largest();
    const double c = pow2(1.0 / p);

    std::vector<BoundReport> out;
    if (g.order() < 2) {
        for (const CheckSpec* s : {&adjacency, &edge_count, &zagreb, &average, &randic, &distinct, &n2_upper, &spread})
            out.push_back(not_applicable(a, *s, "n < 2"));
        return out;
    }

    if (g.size() == 0) {
        for (const CheckSpec* s : {&adjacency, &edge_count, &zagreb, &average, &randic})
            out.push_back(not_applicable(a, *s, "graph has no edges"));
    } else {
        const Side if_regular = regular ? Side::both : Side::none;
        out.push_back(evaluate(a, adjacency, xi1, c * dl * mu1, c * D * mu1, if_regular, opt));

        if (connected) {
            Side side = Side::none;
            if (a.complete()) {
                side = Side::both;
            } else if (regular) {
                side = Side::lower;
            }
            out.push_back(evaluate(a, edge_count, xi1, 2.0 * c * (m / n) * dl, c * std::sqrt(2.0 * m - n + 1.0) * D,
                                   side, opt));
        } else {
            out.push_back(not_applicable(a, edge_count, "graph is disconnected"));
        }

        out.push_back(evaluate(a, zagreb, xi1, c * std::sqrt(a.indices().m1 / n) * dl, c * D * D, if_regular, opt));
        out.push_back(evaluate(a, average, xi1, c * dl * a.stats().average_degree, std::nullopt,
                               regular ? Side::lower : Side::none, opt));
        out.push_back(evaluate(a, randic, xi1, c * (dl / m) * a.indices().randic, std::nullopt, Side::none, opt));
    }

    if (connected) {
        out.push_back(evaluate(a, distinct, static_cast<double>(a.sombor().distinct.size()),
                               static_cast<double>(*a.stats().diameter) + 1.0, std::nullopt, Side::none, opt));
    } else {
        out.push_back(not_applicable(a, distinct, "graph is disconnected"));
    }

    out.push_back(evaluate(a, n2_upper, xi1, std::nullopt, std::sqrt((n - 1.0) * n2 / n),
                           a.complete() || a.edgeless() ? Side::upper : Side::none, opt));

    if (!connected) {
        out.push_back(not_applicable(a, spread, "graph is disconnected"));
    } else {
        out.push_back(evaluate(a, spread, a.invariants().spread, std::nullopt, std::sqrt(2.0 * n2), Side::none, opt));
    }
    return out;
}

}  // namespace psombor
