#include <algorithm>
#include <cmath>

#include "bounds_detail.hpp"

namespace psombor {

using detail::CheckSpec;
using detail::evaluate;
using detail::not_applicable;
using detail::pow2;

std::vector<BoundReport> check_nordhaus_gaddum(const GraphAnalysis& a, const BoundOptions& opt) {
    static const CheckSpec radius_min_degree{"ng.radius_min_degree", "xi1 >= 2^(1+1/p) delta m / n"};
    static const CheckSpec radius_hong{"ng.radius_hong", "xi1 <= 2^(1/p) Delta sqrt(2m - delta(n-1) + (delta-1) Delta)"};
    static const CheckSpec energy_min_degree{"ng.energy_min_degree", "E >= 2^(2+1/p) delta m / n"};
    static const CheckSpec energy_upper{"ng.energy_upper",
                                        "E <= a + sqrt((n-1)(2^(1+2/p) m Delta^2 - a^2)), "
                                        "a = max(2^(1+1/p) delta m / n, Delta sqrt(2^(1+2/p) m / n))"};
    static const CheckSpec radius_sum_lower{"ng.radius_sum_lower",
                                            "xi1 + xi1(G') >= 2^(1+1/p)/n (m delta + (n-1-Delta)(C(n,2) - m))"};
    static const CheckSpec radius_sum_dominating{
        "ng.radius_sum_upper_dominating",
        "xi1 + xi1(G') <= 2^(1/p)(n-1) sqrt(2m-n+1) + 2^(1/p) Delta(C1) sqrt(2|E(C1)| - delta(C1)(|C1|-1-Delta(C1)) - Delta(C1))"};
    static const CheckSpec radius_sum_upper{
        "ng.radius_sum_upper",
        "xi1 + xi1(G') <= 2^(1/p) Delta sqrt(2m - delta(n-1) + (delta-1) Delta) + "
        "2^(1/p)(n-1-delta) sqrt(2 C(n,2) - 2m - (delta+1)(n-1) + delta(Delta+1))"};
    static const CheckSpec energy_sum_lower{
        "ng.energy_sum_lower",
        "E + E(G') >= 2^(2+1/p) (m delta / n + sum_i |E(C_i)| (|C_i| - 1 - Delta(C_i)) / |C_i|)"};

    const Graph& g = a.graph();
    const double p = a.p();
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double D = static_cast<double>(a.stats().max_degree);
    const double dl = static_cast<double>(a.stats().min_degree);
    const bool regular = a.stats().is_regular;
    const bool connected = a.stats().is_connected;
    const double xi1 = a.invariants().radius;
    const double E = a.invariants().energy;
    const double xi1c = a.complement_sombor().largest();
    const double Ec = spectral_invariants(a.complement_sombor()).energy;
    const double c = pow2(1.0 / p);
    const double pairs = n * (n - 1.0) / 2.0;

    std::vector<BoundReport> out;
    if (g.order() < 2) {
        for (const CheckSpec* s : {&radius_min_degree, &radius_hong, &energy_min_degree, &energy_upper,
                                   &radius_sum_lower, &radius_sum_dominating, &radius_sum_upper, &energy_sum_lower})
            out.push_back(not_applicable(a, *s, "n < 2"));
        return out;
    }

    if (g.size() == 0) {
        out.push_back(not_applicable(a, radius_min_degree, "graph has no edges"));
        out.push_back(not_applicable(a, radius_hong, "graph has no edges"));
        out.push_back(not_applicable(a, energy_min_degree, "graph has no edges"));
        out.push_back(not_applicable(a, energy_upper, "graph has no edges"));
    } else {
        out.push_back(evaluate(a, radius_min_degree, xi1, 2.0 * c * dl * m / n, std::nullopt,
                               regular ? Side::lower : Side::none, opt));
        if (dl >= 1.0) {
            out.push_back(evaluate(a, radius_hong, xi1, std::nullopt,
                                   c * D * std::sqrt(std::max(0.0, 2.0 * m - dl * (n - 1.0) + (dl - 1.0) * D)),
                                   regular ? Side::upper : Side::none, opt));
        } else {
            out.push_back(not_applicable(a, radius_hong, "minimum degree 0"));
        }
        const bool multipartite_eq = regular && is_complete_multipartite(g);
        out.push_back(evaluate(a, energy_min_degree, E, 4.0 * c * dl * m / n, std::nullopt,
                               multipartite_eq ? Side::lower : Side::none, opt));
        if (dl >= 1.0) {
            const double k = pow2(1.0 + 2.0 / p);
            const double av = std::max(2.0 * c * dl * m / n, D * std::sqrt(k * m / n));
            const double radicand = (n - 1.0) * (k * m * D * D - av * av);
            out.push_back(evaluate(a, energy_upper, E, std::nullopt, av + std::sqrt(std::max(0.0, radicand)),
                                   Side::none, opt));
            if (radicand < 0.0) out.back().note = "negative radicand clamped to 0";
        } else {
            out.push_back(not_applicable(a, energy_upper, "minimum degree 0"));
        }
    }

    out.push_back(evaluate(a, radius_sum_lower, xi1 + xi1c, 2.0 * c / n * (m * dl + (n - 1.0 - D) * (pairs - m)),
                           std::nullopt, regular ? Side::lower : Side::none, opt));

    const auto& comps = a.complement_components();
    if (!connected) {
        out.push_back(not_applicable(a, radius_sum_dominating, "graph is disconnected"));
        out.push_back(not_applicable(a, radius_sum_upper, "graph is disconnected"));
        out.push_back(not_applicable(a, energy_sum_lower, "graph is disconnected"));
        return out;
    }

    if (D == n - 1.0 || dl == n - 1.0) {
        // C1: the complement component carrying the complement's spectral radius.
        const ComplementComponent* c1 = &comps.front();
        for (const auto& comp : comps)
            if (comp.radius > c1->radius) c1 = &comp;
        const double vc = static_cast<double>(c1->graph.order());
        const double ec = static_cast<double>(c1->graph.size());
        const double Dc = static_cast<double>(c1->graph.max_degree());
        const double dc = static_cast<double>(c1->graph.min_degree());
        const double inner = 2.0 * ec - dc * (vc - 1.0 - Dc) - Dc;
        const double bound = c * (n - 1.0) * std::sqrt(std::max(0.0, 2.0 * m - n + 1.0)) +
                             c * Dc * std::sqrt(std::max(0.0, inner));
        out.push_back(evaluate(a, radius_sum_dominating, xi1 + xi1c, std::nullopt, bound, Side::none, opt));
        out.push_back(not_applicable(a, radius_sum_upper, "Delta = n - 1"));
    } else {
        out.push_back(not_applicable(a, radius_sum_dominating, "Delta <= n - 2"));
        const double bound =
            c * D * std::sqrt(std::max(0.0, 2.0 * m - dl * (n - 1.0) + (dl - 1.0) * D)) +
            c * (n - 1.0 - dl) *
                std::sqrt(std::max(0.0, 2.0 * pairs - 2.0 * m - (dl + 1.0) * (n - 1.0) + dl * (D + 1.0)));
        out.push_back(evaluate(a, radius_sum_upper, xi1 + xi1c, std::nullopt, bound, Side::none, opt));
    }

    {
        double sum = 0.0;
        for (const auto& comp : comps) {
            const double vc = static_cast<double>(comp.graph.order());
            sum += static_cast<double>(comp.graph.size()) * (vc - 1.0 - static_cast<double>(comp.graph.max_degree())) / vc;
        }
        // Only K_n is tight; other regular complete multipartite graphs such
        // as C4 stay strictly above the bound.
        out.push_back(evaluate(a, energy_sum_lower, E + Ec, 4.0 * c * (m * dl / n + sum), std::nullopt,
                               a.complete() ? Side::lower : Side::none, opt));
    }
    return out;
}

}  // namespace psombor
