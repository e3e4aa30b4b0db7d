#include <cmath>

#include "bounds_detail.hpp"

namespace psombor {

using detail::CheckSpec;
using detail::evaluate;
using detail::not_applicable;
using detail::pow2;

std::vector<BoundReport> check_moment_index_bounds(const GraphAnalysis& a, const BoundOptions& opt) {
    static const CheckSpec pairs{"index.n2_pairs",
                                 "sqrt(N2/2 + 2^(2/p) delta^2 m(m-1)) <= SO_p <= sqrt(N2/2 + 2^(2/p) Delta^2 m(m-1))"};
    static const CheckSpec linear{"index.n2_linear", "N2/(2^(1+1/p) Delta) <= SO_p <= N2/(2^(1+1/p) delta)"};
    static const CheckSpec triangles{"index.n3_triangles",
                                     "N3/(2^(1+2/p) Delta^2 t_max) <= SO_p <= N3/(2^(1+2/p) delta^2 t_min)"};
    static const CheckSpec zagreb{"index.n4_zagreb",
                                  "(N4 - 2^(4/p) Delta^5 (M1-2m))/(2^(1+3/p) Delta^4) <= SO_p <= "
                                  "(N4 - 2^(4/p) delta^4 (M1-2m))/(2^(1+3/p) delta^4)"};
    static const CheckSpec complete_max{"index.complete_max", "SO_p <= 2^(1/p-1) n (n-1)^2"};
    static const CheckSpec radius{"index.radius_sandwich",
                                  "n xi1^2 / (2^(1+1/p) Delta (n-1)) <= SO_p <= n xi1 / 2"};
    static const CheckSpec variance{"index.variance_identity", "SO_p = sqrt(m N2 / 2 - m^2 sigma^2)"};
    static const CheckSpec isi{"index.isi", "SO_p >= 2^(1+1/p) ISI", PDomain::at_least_one};

    const Graph& g = a.graph();
    const double p = a.p();
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double D = static_cast<double>(a.stats().max_degree);
    const double dl = static_cast<double>(a.stats().min_degree);
    const bool regular = a.stats().is_regular;
    const double so = a.indices().so_p;
    const double n2 = a.moments()[2];
    const double n3 = a.moments()[3];
    const double n4 = a.moments()[4];
    const double xi1 = a.invariants().radius;

    std::vector<BoundReport> out;
    auto all_na = [&](const std::string& why) {
        for (const CheckSpec* s : {&pairs, &linear, &triangles, &zagreb, &complete_max, &radius, &variance, &isi})
            out.push_back(not_applicable(a, *s, why));
    };
    if (g.order() < 2) {
        all_na("n < 2");
        return out;
    }
    if (g.size() == 0) {
        all_na("graph has no edges");
        return out;
    }
    const Side if_regular = regular ? Side::both : Side::none;

    out.push_back(evaluate(a, pairs, so, std::sqrt(0.5 * n2 + pow2(2.0 / p) * dl * dl * m * (m - 1.0)),
                           std::sqrt(0.5 * n2 + pow2(2.0 / p) * D * D * m * (m - 1.0)), if_regular, opt));

    {
        const double c = pow2(1.0 + 1.0 / p);
        std::optional<double> hi;
        if (dl > 0.0) hi = n2 / (c * dl);
        out.push_back(evaluate(a, linear, so, n2 / (c * D), hi, if_regular, opt));
        if (!hi) out.back().note = "upper side omitted: isolated vertex";
    }

    {
        const std::size_t tmin = a.stats().t_min.value_or(0);
        const std::size_t tmax = a.stats().t_max.value_or(0);
        if (tmin == 0) {
            out.push_back(not_applicable(a, triangles, "t_min = 0"));
        } else {
            const double c = pow2(1.0 + 2.0 / p);
            std::optional<double> hi;
            if (dl > 0.0) hi = n3 / (c * dl * dl * static_cast<double>(tmin));
            out.push_back(evaluate(a, triangles, so, n3 / (c * D * D * static_cast<double>(tmax)), hi,
                                   regular && tmin == tmax ? Side::both : Side::none, opt));
        }
    }

    {
        const double paths = a.indices().m1 - 2.0 * m;  // ordered pairs joined by a 2-path
        const double c = pow2(1.0 + 3.0 / p);
        const double lo = (n4 - pow2(4.0 / p) * std::pow(D, 5) * paths) / (c * std::pow(D, 4));
        std::optional<double> hi;
        if (dl > 0.0) hi = (n4 - pow2(4.0 / p) * std::pow(dl, 4) * paths) / (c * std::pow(dl, 4));
        const bool kdd = regular && is_complete_bipartite(g);
        const bool c4free = regular && is_c4_free(g);
        Side side = Side::none;
        if (kdd && c4free) {
            side = Side::both;
        } else if (kdd) {
            side = Side::lower;
        } else if (c4free) {
            side = Side::upper;
        }
        out.push_back(evaluate(a, zagreb, so, lo, hi, side, opt));
    }

    if (a.stats().is_connected) {
        out.push_back(evaluate(a, complete_max, so, std::nullopt, pow2(1.0 / p - 1.0) * n * (n - 1.0) * (n - 1.0),
                               a.complete() ? Side::upper : Side::none, opt));
    } else {
        out.push_back(not_applicable(a, complete_max, "graph is disconnected"));
    }

    {
        const Side side = a.complete() ? Side::both : (regular ? Side::upper : Side::none);
        out.push_back(evaluate(a, radius, so, n * xi1 * xi1 / (pow2(1.0 + 1.0 / p) * D * (n - 1.0)),
                               n * xi1 / 2.0, side, opt));
    }

    {
        const double sigma2 = a.indices().sigma_sq.value_or(0.0);
        const double target = std::sqrt(std::max(0.0, 0.5 * m * n2 - m * m * sigma2));
        out.push_back(evaluate(a, variance, so, target, target, Side::both, opt, 1e-10));
    }

    out.push_back(evaluate(a, isi, so, pow2(1.0 + 1.0 / p) * a.indices().isi, std::nullopt,
                           regular ? Side::lower : Side::none, opt));
    return out;
}

}  // namespace psombor
