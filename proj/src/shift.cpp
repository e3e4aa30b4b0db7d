#include <algorithm>
#include <cmath>

#include "psombor/extremal.hpp"
#include "psombor/spectral.hpp"

namespace psombor {

bool ShiftReport::ok() const {
    if (!applicable) return true;
    return std::all_of(shifts.begin(), shifts.end(), [](const ShiftOutcome& s) { return s.increased; });
}

ShiftReport shift_experiment(const Graph& g, double p) {
    ShiftReport r;
    r.p = p;
    r.hard = p >= 1.0;
    if (!r.hard) r.reason = "observe-only for p < 1";
    if (!is_connected(g)) {
        r.applicable = false;
        r.reason = "graph is disconnected";
        return r;
    }
    std::vector<Edge> eligible;
    for (const CutEdge& c : cut_edges(g))
        if (!c.pendant) eligible.push_back(c.edge);
    if (eligible.empty()) {
        r.applicable = false;
        r.reason = "no non-pendant cut edge";
        return r;
    }

    const SpectralDecomposition dec = sombor_spectrum(g, p, true);
    r.radius = dec.largest();
    const std::vector<double>& x = dec.vectors->front();
    r.perron_positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });

    for (Edge e : eligible) {
        ShiftOutcome s;
        s.edge = e;
        if (x[e.u] < x[e.v]) {
            // The shift is symmetric in the bridge; move onto the heavier end.
            s.edge = {e.v, e.u};
            s.swapped = true;
        }
        s.x_u = x[s.edge.u];
        s.x_v = x[s.edge.v];
        s.result = shift_transform(g, s.edge);
        s.radius_after = sombor_spectrum(s.result, p).largest();
        s.increased = s.radius_after - r.radius > 1e-10 * r.radius;
        r.shifts.push_back(std::move(s));
    }
    return r;
}

ShiftChain shift_until_stable(const Graph& g, double p) {
    ShiftChain chain;
    Graph current = g;
    chain.radii.push_back(sombor_spectrum(current, p).largest());
    while (true) {
        const ShiftReport r = shift_experiment(current, p);
        if (!r.applicable || r.shifts.empty()) break;
        current = r.shifts.front().result;
        chain.radii.push_back(r.shifts.front().radius_after);
        if (chain.radii.back() <= chain.radii[chain.radii.size() - 2]) chain.monotone = false;
    }
    chain.final_graph = std::move(current);
    return chain;
}

}  // namespace psombor
