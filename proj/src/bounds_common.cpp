#include <algorithm>
#include <cmath>
#include <limits>

#include "bounds_detail.hpp"

namespace psombor {

const char* to_string(Side side) {
    switch (side) {
        case Side::none: return "none";
        case Side::lower: return "lower";
        case Side::upper: return "upper";
        case Side::both: return "both";
    }
    return "?";
}

const char* to_string(ReportStatus status) {
    switch (status) {
        case ReportStatus::pass: return "pass";
        case ReportStatus::fail: return "fail";
        case ReportStatus::not_applicable: return "not_applicable";
        case ReportStatus::observed: return "observed";
    }
    return "?";
}

ReportStatus BoundReport::status() const {
    if (!applicable) return ReportStatus::not_applicable;
    if (!hard) return ReportStatus::observed;
    if (!holds) return ReportStatus::fail;
    if (equality_expected != Side::none && !equality_observed) return ReportStatus::fail;
    return ReportStatus::pass;
}

double BoundReport::relative_slack() const { return slack / std::max(1.0, std::abs(value)); }

GraphAnalysis::GraphAnalysis(Graph g, double p, std::string id)
    : graph_(std::move(g)), p_(p), id_(std::move(id)) {
    if (p_ == 0.0) throw DomainError("p must be non-zero");
    stats_ = structure_stats(graph_);
    sombor_ = sombor_spectrum(graph_, p_);
    adjacency_ = adjacency_spectrum(graph_);
    laplacian_ = laplacian_spectrum(graph_, p_);
    moments_ = moments_closed_form(graph_, p_);
    indices_ = index_bundle(graph_, p_);
    invariants_ = spectral_invariants(sombor_);
    complete_ = is_complete(graph_);
    edgeless_ = is_edgeless(graph_);

    complement_ = complement(graph_);
    complement_sombor_ = sombor_spectrum(complement_, p_);
    for (auto& comp : connected_components(complement_)) {
        ComplementComponent c;
        c.graph = induced_subgraph(complement_, comp);
        c.vertices = std::move(comp);
        c.radius = c.graph.size() == 0 ? 0.0 : sombor_spectrum(c.graph, p_).largest();
        complement_components_.push_back(std::move(c));
    }

    if (stats_.is_regular && graph_.size() > 0) {
        subdivision_energy_ = spectral_invariants(sombor_spectrum(subdivision(graph_), p_)).energy;
    }
}

namespace detail {

namespace {

BoundReport base_report(const GraphAnalysis& a, const CheckSpec& spec) {
    BoundReport r;
    r.check_id = std::string(spec.id);
    r.statement = std::string(spec.statement);
    r.p = a.p();
    r.graph_id = a.id();
    switch (spec.domain) {
        case PDomain::all:
            r.hard = true;
            break;
        case PDomain::at_least_one:
            r.hard = a.p() >= 1.0;
            if (!r.hard) r.reason = "observe-only for p < 1";
            break;
        case PDomain::never:
            r.hard = false;
            r.reason = "observe-only";
            break;
    }
    return r;
}

}  // namespace

BoundReport not_applicable(const GraphAnalysis& a, const CheckSpec& spec, std::string reason) {
    BoundReport r = base_report(a, spec);
    r.applicable = false;
    r.hard = false;
    r.reason = std::move(reason);
    r.value = std::numeric_limits<double>::quiet_NaN();
    return r;
}

BoundReport evaluate(const GraphAnalysis& a, const CheckSpec& spec, double value, std::optional<double> lower,
                     std::optional<double> upper, Side expected, const BoundOptions& opt,
                     std::optional<double> holds_tol) {
    if ((lower && !std::isfinite(*lower)) || (upper && !std::isfinite(*upper)) || !std::isfinite(value)) {
        return not_applicable(a, spec, "bound not finite for this graph");
    }
    BoundReport r = base_report(a, spec);
    r.value = value;
    r.lower = lower;
    r.upper = upper;
    r.equality_expected = expected;

    const double scale = std::max(1.0, std::abs(value));
    const double htol = holds_tol.value_or(opt.holds_tol) * scale;
    const double etol = opt.equality_tol * scale;

    double slack = std::numeric_limits<double>::infinity();
    r.holds = true;
    if (lower) {
        slack = std::min(slack, value - *lower);
        if (value < *lower - htol) r.holds = false;
    }
    if (upper) {
        slack = std::min(slack, *upper - value);
        if (value > *upper + htol) r.holds = false;
    }
    r.slack = std::isfinite(slack) ? slack : 0.0;

    const bool lower_tight = lower && std::abs(value - *lower) <= etol;
    const bool upper_tight = upper && std::abs(*upper - value) <= etol;
    switch (expected) {
        case Side::none: r.equality_observed = lower_tight || upper_tight; break;
        case Side::lower: r.equality_observed = lower_tight; break;
        case Side::upper: r.equality_observed = upper_tight; break;
        case Side::both: r.equality_observed = lower_tight && upper_tight; break;
    }
    return r;
}

}  // namespace detail

EnergyBoundComparison compare_energy_lower_bounds(const MomentSet& moments) {
    EnergyBoundComparison c;
    const double denom = std::sqrt(moments[2] * moments[4]);
    c.ratio = denom > 0.0 ? moments[3] / denom : 0.0;
    // sqrt(N2^3/N4) / (N2^2/N3) equals the ratio, so ratio > 1 favours the N4 form.
    if (std::abs(c.ratio - 1.0) <= 1e-12) {
        c.tighter = TighterBound::equal;
    } else {
        c.tighter = c.ratio > 1.0 ? TighterBound::holder_n4 : TighterBound::holder_n3;
    }
    return c;
}

std::vector<BoundReport> check_moment_routes(const GraphAnalysis& a, const BoundOptions& opt) {
    static constexpr std::string_view ids[] = {"moments.route_k0", "moments.route_k1", "moments.route_k2",
                                               "moments.route_k3", "moments.route_k4"};
    std::vector<BoundReport> out;
    for (int k = 0; k <= 4; ++k) {
        const detail::CheckSpec spec{ids[k], "sum of lambda^k equals the closed-form moment", PDomain::all};
        const double spectral = moment_from_spectrum(a.sombor(), k);
        const double closed = a.moments()[static_cast<std::size_t>(k)];
        BoundOptions o = opt;
        // Moments are sums of many terms; compare relative to the closed form.
        const double scale = std::max(1.0, std::abs(closed));
        o.equality_tol = opt.holds_tol * scale / std::max(1.0, std::abs(spectral));
        auto r = detail::evaluate(a, spec, spectral, closed, closed, Side::both, o,
                                  opt.holds_tol * scale / std::max(1.0, std::abs(spectral)));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> check_all(const GraphAnalysis& a, const BoundOptions& opt) {
    std::vector<BoundReport> out;
    auto append = [&](std::vector<BoundReport> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(check_moment_routes(a, opt));
    append(check_moment_index_bounds(a, opt));
    append(check_laplacian_bounds(a, opt));
    append(check_radius_bounds(a, opt));
    append(check_energy_estrada_bounds(a, opt));
    append(check_nordhaus_gaddum(a, opt));
    return out;
}

std::vector<BoundReport> check_all(const Graph& g, double p, const std::string& id, const BoundOptions& opt) {
    return check_all(GraphAnalysis(g, p, id), opt);
}

}  // namespace psombor
