#include <cmath>
#include <numbers>

#include "bounds_detail.hpp"

namespace psombor {

using detail::CheckSpec;
using detail::evaluate;
using detail::not_applicable;

namespace {

// sqrt of a radicand that may dip below zero; records the clamp on the report.
double clamped_sqrt(double x, bool& clamped) {
    clamped = x < 0.0;
    return std::sqrt(clamped ? 0.0 : x);
}

}  // namespace

std::vector<BoundReport> check_energy_estrada_bounds(const GraphAnalysis& a, const BoundOptions& opt) {
    static const CheckSpec n2_sandwich{"energy.n2_sandwich", "sqrt(2 N2) <= E <= sqrt(n N2)"};
    static const CheckSpec determinant{"energy.determinant", "E >= sqrt(n(n-1) D^(2/n) + N2), D = |det S_p|"};
    static const CheckSpec extreme_ratio{"energy.extreme_ratio", "E >= (N2 + n |xi1| |xin|) / (|xi1| + |xin|)",
                                         PDomain::never};
    static const CheckSpec extreme_gap{"energy.extreme_gap", "E >= (1/2) sqrt(4 n N2 - n^2 (|xi1| - |xin|)^2)",
                                       PDomain::never};
    static const CheckSpec extreme_floor{"energy.extreme_floor",
                                         "E >= sqrt(n N2 - n floor(n/2) (1 - floor(n/2)/n) (|xi1| - |xin|)^2)",
                                         PDomain::never};
    static const CheckSpec holder_n4{"energy.holder_n4", "E >= sqrt(N2^3 / N4)"};
    static const CheckSpec holder_n3{"energy.holder_n3", "E >= N2^2 / N3", PDomain::never};
    static const CheckSpec minus_energy{"estrada.minus_energy",
                                        "EE - E <= n - 1 + e^sqrt(N2) - sqrt(N2) - sqrt(2 N2)"};
    static const CheckSpec plus_energy{"estrada.plus_energy", "EE + E <= n - 1 + e^E"};
    static const CheckSpec n2_tight{"energy.n2_tight", "E <= sqrt((3n - 1) N2 / 3)", PDomain::never};
    static const CheckSpec moment_upper{"estrada.moment_upper",
                                        "EE <= n - 1 + N2/2 + N3/6 - N4^(1/4) - N4^(1/2)/2 - N4^(3/4)/6 + e^(N4^(1/4))"};
    static const CheckSpec moment_lower{"estrada.moment_lower",
                                        "EE >= sqrt(n^2 + (N2/2)^2 + n N2 + n N3/3 + n N4/12)"};
    static const CheckSpec inertia_sandwich{"estrada.inertia_sandwich",
                                            "(e-1)/2 E + n - n_+ <= EE <= n - 1 + e^(E/2)"};
    static const CheckSpec inertia_lower{
        "estrada.inertia_lower",
        "EE >= e^xi1 + n_0 + (n_+ - 1) e^((E - 2 xi1) / (2 (n_+ - 1))) + n_- e^(-E / (2 n_-))"};
    static const CheckSpec subdivision{"energy.subdivision", "E(S(G)) <= 2 sqrt(2) sqrt(m n) (2^p + k^p)^(1/p)"};

    const Graph& g = a.graph();
    const double p = a.p();
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double n2 = a.moments()[2];
    const double n3 = a.moments()[3];
    const double n4 = a.moments()[4];
    const auto& inv = a.invariants();
    const double E = inv.energy;
    const double EE = inv.estrada;
    const double xi1 = a.sombor().largest();
    const double xin = a.sombor().smallest();
    const bool nk1 = a.edgeless();
    const Side if_nk1_both = nk1 ? Side::both : Side::none;
    const Side if_nk1_upper = nk1 ? Side::upper : Side::none;

    std::vector<BoundReport> out;
    const CheckSpec* all[] = {&n2_sandwich,  &determinant, &extreme_ratio, &extreme_gap,      &extreme_floor,
                              &holder_n4,    &holder_n3,   &minus_energy,  &plus_energy,      &n2_tight,
                              &moment_upper, &moment_lower, &inertia_sandwich, &inertia_lower, &subdivision};
    if (g.order() < 2) {
        for (const CheckSpec* s : all) out.push_back(not_applicable(a, *s, "n < 2"));
        return out;
    }
    const bool has_edges = g.size() > 0;
    auto needs_edges = [&](const CheckSpec& s) { out.push_back(not_applicable(a, s, "graph has no edges")); };

    out.push_back(evaluate(a, n2_sandwich, E, std::sqrt(2.0 * n2), std::sqrt(n * n2), if_nk1_both, opt));

    if (has_edges) {
        const double D = inv.abs_det;
        out.push_back(evaluate(a, determinant, E, std::sqrt(n * (n - 1.0) * std::pow(D, 2.0 / n) + n2), std::nullopt,
                               Side::none, opt));

        const double x1 = std::abs(xi1);
        const double xn = std::abs(xin);
        out.push_back(evaluate(a, extreme_ratio, E, (n2 + n * x1 * xn) / (x1 + xn), std::nullopt, Side::none, opt));

        bool clamped = false;
        const double gap = 0.5 * clamped_sqrt(4.0 * n * n2 - n * n * (x1 - xn) * (x1 - xn), clamped);
        out.push_back(evaluate(a, extreme_gap, E, gap, std::nullopt, Side::none, opt));
        if (clamped) out.back().note = "negative radicand clamped to 0";

        const double h = std::floor(n / 2.0);
        const double floor_bound =
            clamped_sqrt(n * n2 - n * h * (1.0 - h / n) * (x1 - xn) * (x1 - xn), clamped);
        out.push_back(evaluate(a, extreme_floor, E, floor_bound, std::nullopt, Side::none, opt));
        if (clamped) out.back().note = "negative radicand clamped to 0";

        out.push_back(evaluate(a, holder_n4, E, std::sqrt(n2 * n2 * n2 / n4), std::nullopt, Side::none, opt));

        const auto cmp = compare_energy_lower_bounds(a.moments());
        if (a.stats().t_max.value_or(0) == 0) {
            out.push_back(not_applicable(a, holder_n3, "graph has no triangle (N3 = 0)"));
        } else {
            out.push_back(evaluate(a, holder_n3, E, n2 * n2 / n3, std::nullopt, Side::none, opt));
        }
        out.back().note = "N3/sqrt(N2 N4) = " + std::to_string(cmp.ratio);
    } else {
        for (const CheckSpec* s : {&determinant, &extreme_ratio, &extreme_gap, &extreme_floor, &holder_n4, &holder_n3})
            needs_edges(*s);
    }

    {
        const double r = std::sqrt(n2);
        out.push_back(evaluate(a, minus_energy, EE - E, std::nullopt,
                               n - 1.0 + std::exp(r) - r - std::sqrt(2.0 * n2), if_nk1_upper, opt));
    }
    out.push_back(evaluate(a, plus_energy, EE + E, std::nullopt, n - 1.0 + std::exp(E), if_nk1_upper, opt));
    out.push_back(evaluate(a, n2_tight, E, std::nullopt, std::sqrt((3.0 * n - 1.0) * n2 / 3.0), if_nk1_upper, opt));

    if (has_edges) {
        const double q = std::pow(n4, 0.25);
        out.push_back(evaluate(a, moment_upper, EE, std::nullopt,
                               n - 1.0 + n2 / 2.0 + n3 / 6.0 - q - q * q / 2.0 - q * q * q / 6.0 + std::exp(q),
                               Side::none, opt));
        out.push_back(evaluate(a, moment_lower, EE,
                               std::sqrt(n * n + 0.25 * n2 * n2 + n * n2 + n * n3 / 3.0 + n * n4 / 12.0), std::nullopt,
                               Side::none, opt));
    } else {
        needs_edges(moment_upper);
        needs_edges(moment_lower);
    }

    const auto& in = a.sombor().inertia;
    const double npos = static_cast<double>(in.positive);
    const double nneg = static_cast<double>(in.negative);
    const double nzero = static_cast<double>(in.zero);
    out.push_back(evaluate(a, inertia_sandwich, EE, 0.5 * (std::numbers::e - 1.0) * E + n - npos,
                           n - 1.0 + std::exp(E / 2.0), if_nk1_both, opt));

    if (in.positive >= 2 && in.negative >= 1) {
        const double lo = std::exp(xi1) + nzero + (npos - 1.0) * std::exp((E - 2.0 * xi1) / (2.0 * (npos - 1.0))) +
                          nneg * std::exp(-E / (2.0 * nneg));
        out.push_back(evaluate(a, inertia_lower, EE, lo, std::nullopt, Side::none, opt));
    } else {
        out.push_back(not_applicable(a, inertia_lower, "needs n_+ >= 2 and n_- >= 1"));
    }

    if (!a.stats().is_regular) {
        out.push_back(not_applicable(a, subdivision, "graph is not regular"));
    } else if (!has_edges) {
        needs_edges(subdivision);
    } else {
        const double k = static_cast<double>(a.stats().max_degree);
        const double bound = 2.0 * std::numbers::sqrt2 * std::sqrt(m * n) * std::pow(std::pow(2.0, p) + std::pow(k, p), 1.0 / p);
        out.push_back(evaluate(a, subdivision, *a.subdivision_energy(), std::nullopt, bound, Side::none, opt));
    }

    for (auto& r : out) {
        if (inv.estrada_overflow_risk && r.check_id.rfind("estrada.", 0) == 0) {
            r.note += r.note.empty() ? "" : "; ";
            r.note += "spectral radius near exp overflow";
        }
    }
    return out;
}

}  // namespace psombor
