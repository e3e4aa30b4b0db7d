#include <algorithm>
#include <cmath>
#include <numeric>

#include "bounds_detail.hpp"

namespace psombor {

using detail::CheckSpec;
using detail::evaluate;
using detail::not_applicable;
using detail::pow2;

std::vector<BoundReport> check_laplacian_bounds(const GraphAnalysis& a, const BoundOptions& opt) {
    static const CheckSpec zero{"laplacian.zero_eigenvalue", "smallest eigenvalue of L_p is 0"};
    static const CheckSpec zero_simple{"laplacian.zero_simple", "eigenvalue 0 of L_p is simple"};
    static const CheckSpec trace{"laplacian.trace_identity", "SO_p = (1/2) sum eta_i"};
    static const CheckSpec sandwich{"laplacian.trace_sandwich", "(n-1)/2 eta_{n-1} <= SO_p <= (n-1)/2 eta_1"};
    static const CheckSpec bipartite_sw{"laplacian.bipartite_sandwich",
                                        "n1 n2 / n eta_{n-1} <= SO_p <= n1 n2 / n eta_1"};
    static const CheckSpec so_max_degree{"laplacian.so_max_degree", "SO_p <= 2^(1/p) Delta m",
                                         PDomain::at_least_one};
    static const CheckSpec so_holder{"laplacian.so_holder", "SO_p <= n^(1/p) Delta^(1+1/p) m^(1-1/p)",
                                     PDomain::at_least_one};
    static const CheckSpec trace_upper{"laplacian.trace_upper",
                                       "sum eta_i <= min(2^(1+1/p) Delta m, 2 n^(1/p) Delta^(1+1/p) m^(1-1/p))",
                                       PDomain::at_least_one};
    static const CheckSpec second_upper{"laplacian.second_smallest_upper",
                                        "eta_{n-1} <= min(2^(1+1/p) Delta m, 2 n^(1/p) Delta^(1+1/p) m^(1-1/p)) / (n-1)",
                                        PDomain::at_least_one};
    static const CheckSpec largest_n2{"laplacian.largest_lower_n2", "eta_1 >= N2 / (2^(1/p) Delta (n-1))"};
    static const CheckSpec second_n2{"laplacian.second_smallest_n2", "eta_{n-1} <= N2 / (2^(1/p) delta (n-1))"};

    const Graph& g = a.graph();
    const double p = a.p();
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double D = static_cast<double>(a.stats().max_degree);
    const double dl = static_cast<double>(a.stats().min_degree);
    const bool regular = a.stats().is_regular;
    const bool connected = a.stats().is_connected;
    const double so = a.indices().so_p;
    const double n2 = a.moments()[2];
    const auto& eta = a.laplacian().values;  // descending

    std::vector<BoundReport> out;
    const CheckSpec* all[] = {&zero,      &zero_simple, &trace,        &sandwich,    &bipartite_sw, &so_max_degree,
                              &so_holder, &trace_upper, &second_upper, &largest_n2, &second_n2};
    auto all_na = [&](const std::string& why) {
        for (const CheckSpec* s : all) out.push_back(not_applicable(a, *s, why));
    };
    if (g.order() < 2) {
        all_na("n < 2");
        return out;
    }
    if (g.size() == 0) {
        all_na("graph has no edges");
        return out;
    }

    const double eta1 = eta.front();
    const double eta_second_smallest = eta[eta.size() - 2];
    const double eta_sum = std::accumulate(eta.begin(), eta.end(), 0.0);

    if (connected) {
        const double z = tol::inertia_zero * std::max(1.0, a.laplacian().matrix_norm);
        const BoundOptions zopt{z, z};
        out.push_back(evaluate(a, zero, eta.back(), 0.0, 0.0, Side::both, zopt));
        out.push_back(evaluate(a, zero_simple, static_cast<double>(a.laplacian().inertia.zero), 1.0, 1.0, Side::both,
                               opt));
    } else {
        out.push_back(not_applicable(a, zero, "graph is disconnected"));
        out.push_back(not_applicable(a, zero_simple, "graph is disconnected"));
    }

    out.push_back(evaluate(a, trace, so, 0.5 * eta_sum, 0.5 * eta_sum, Side::both, opt, 1e-10));

    if (connected) {
        out.push_back(evaluate(a, sandwich, so, 0.5 * (n - 1.0) * eta_second_smallest, 0.5 * (n - 1.0) * eta1,
                               Side::none, opt));
    } else {
        out.push_back(not_applicable(a, sandwich, "graph is disconnected"));
    }

    if (!connected) {
        out.push_back(not_applicable(a, bipartite_sw, "graph is disconnected"));
    } else if (!a.stats().bipartition) {
        out.push_back(not_applicable(a, bipartite_sw, "graph is not bipartite"));
    } else {
        const double c = static_cast<double>(a.stats().bipartition->first) *
                         static_cast<double>(a.stats().bipartition->second) / n;
        out.push_back(evaluate(a, bipartite_sw, so, c * eta_second_smallest, c * eta1,
                               is_complete_bipartite(g) ? Side::upper : Side::none, opt));
    }

    const double first_form = pow2(1.0 + 1.0 / p) * D * m;
    const double holder_form = 2.0 * std::pow(n, 1.0 / p) * std::pow(D, 1.0 + 1.0 / p) * std::pow(m, 1.0 - 1.0 / p);
    out.push_back(evaluate(a, so_max_degree, so, std::nullopt, 0.5 * first_form,
                           regular ? Side::upper : Side::none, opt));
    out.push_back(evaluate(a, so_holder, so, std::nullopt, 0.5 * holder_form, Side::none, opt));
    out.push_back(evaluate(a, trace_upper, eta_sum, std::nullopt, std::min(first_form, holder_form), Side::none, opt));
    out.push_back(evaluate(a, second_upper, eta_second_smallest, std::nullopt,
                           std::min(first_form, holder_form) / (n - 1.0), Side::none, opt));

    out.push_back(evaluate(a, largest_n2, eta1, n2 / (pow2(1.0 / p) * D * (n - 1.0)), std::nullopt, Side::none, opt));
    if (dl > 0.0) {
        out.push_back(evaluate(a, second_n2, eta_second_smallest, std::nullopt,
                               n2 / (pow2(1.0 / p) * dl * (n - 1.0)), Side::none, opt));
    } else {
        out.push_back(not_applicable(a, second_n2, "graph has an isolated vertex"));
    }
    return out;
}

}  // namespace psombor
