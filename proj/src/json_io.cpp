#include "psombor/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace psombor {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

}  // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw GraphError("graph JSON needs fields \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_unsigned()) throw GraphError("graph JSON: \"n\" must be a non-negative integer");
    const std::size_t n = j["n"].get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw GraphError("graph JSON: each edge must be a pair of vertex ids");
        }
        edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (std::filesystem::path(path).extension() == ".json") {
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw GraphError(path + ": " + e.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(in);
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
    return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Json to_json(const SpectralDecomposition& dec) {
    Json j{{"kind", to_string(dec.kind)}, {"p", optional_json(dec.p)}, {"eigenvalues", dec.values}};
    if (dec.vectors) j["eigenvectors"] = *dec.vectors;
    j["inertia"] = Json{{"positive", dec.inertia.positive}, {"zero", dec.inertia.zero}, {"negative", dec.inertia.negative}};
    Json distinct = Json::array();
    for (const auto& c : dec.distinct) distinct.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}});
    j["distinct"] = std::move(distinct);
    j["frobenius_norm"] = dec.matrix_norm;
    j["residual"] = dec.residual;
    j["sweeps"] = dec.sweeps;
    return j;
}

Json to_json(const MomentSet& moments) {
    return Json{{"p", moments.p}, {"N", Json(moments.n)}};
}

Json to_json(const IndexBundle& b) {
    return Json{{"p", b.p},         {"SO_p", b.so_p}, {"M1", b.m1}, {"ISI", b.isi}, {"randic", b.randic},
                {"sigma_sq", optional_json(b.sigma_sq)}};
}

Json to_json(const SpectralInvariants& inv) {
    return Json{{"spectral_radius", inv.radius}, {"spread", inv.spread}, {"energy", inv.energy},
                {"estrada", inv.estrada},        {"abs_det", inv.abs_det},
                {"estrada_overflow_risk", inv.estrada_overflow_risk}};
}

Json to_json(const StructureStats& s) {
    Json j{{"max_degree", s.max_degree},
           {"min_degree", s.min_degree},
           {"average_degree", s.average_degree},
           {"t_max", optional_json(s.t_max)},
           {"t_min", optional_json(s.t_min)},
           {"diameter", optional_json(s.diameter)},
           {"connected", s.is_connected},
           {"regular", s.is_regular}};
    j["bipartition"] = s.bipartition ? Json::array({s.bipartition->first, s.bipartition->second}) : Json(nullptr);
    Json cuts = Json::array();
    for (const auto& c : s.cut_edges) cuts.push_back(Json{{"edge", edge_json(c.edge)}, {"pendant", c.pendant}});
    j["cut_edges"] = std::move(cuts);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j{{"check_id", r.check_id},
           {"statement", r.statement},
           {"p", r.p},
           {"graph_id", r.graph_id},
           {"status", to_string(r.status())},
           {"applicable", r.applicable},
           {"hard", r.hard},
           {"value", r.applicable ? Json(r.value) : Json(nullptr)},
           {"lower", optional_json(r.lower)},
           {"upper", optional_json(r.upper)},
           {"holds", r.holds},
           {"slack", r.slack},
           {"equality_expected", to_string(r.equality_expected)},
           {"equality_observed", r.equality_observed}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const Violation& v) {
    return Json{{"graph_id", v.graph_id}, {"p", v.p},           {"check_id", v.check_id},
                {"value", v.value},       {"lower", optional_json(v.lower)},
                {"upper", optional_json(v.upper)},
                {"slack", v.slack},       {"hard", v.hard},     {"equality_only", v.equality_only},
                {"edge_list", v.edge_list}};
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::object();
    for (const auto& [id, c] : r.per_check) {
        checks[id] = Json{{"pass", c.passed},
                          {"fail", c.failed},
                          {"not_applicable", c.not_applicable},
                          {"observed", c.observed},
                          {"observed_violations", c.observed_violations},
                          {"equality_expected", c.equality_expected},
                          {"equality_confirmed", c.equality_confirmed},
                          {"min_relative_slack", optional_json(c.min_relative_slack)}};
    }
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    Json observations = Json::array();
    for (const auto& v : r.observations) observations.push_back(to_json(v));
    return Json{{"description", r.description},
                {"graphs", r.graph_count},
                {"p_values", r.p_values},
                {"reports", r.report_count},
                {"ok", r.ok()},
                {"checks", std::move(checks)},
                {"violations", std::move(violations)},
                {"observations", std::move(observations)},
                {"load_errors", r.load_errors},
                {"evaluation_errors", r.evaluation_errors}};
}

Json to_json(const TreeCatalog& cat) {
    Json trees = Json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        Json t = to_json(cat.trees[i]);
        t["key"] = cat.canonical_keys[i];
        trees.push_back(std::move(t));
    }
    return Json{{"n", cat.n}, {"max_degree", optional_json(cat.max_degree)}, {"count", cat.size()},
                {"trees", std::move(trees)}};
}

Json to_json(const TreeExtremes& r) {
    return Json{{"n", r.n},
                {"p", r.p},
                {"hard", r.hard},
                {"trees", r.tree_count},
                {"path_radius", r.path_radius},
                {"star_radius", r.star_radius},
                {"min_radius", r.min_radius},
                {"max_radius", r.max_radius},
                {"min_attained", r.min_attained},
                {"max_attained", r.max_attained},
                {"min_is_path", r.min_is_path},
                {"max_is_star", r.max_is_star},
                {"ok", r.ok()}};
}

Json to_json(const ShiftReport& r) {
    Json shifts = Json::array();
    for (const auto& s : r.shifts) {
        shifts.push_back(Json{{"edge", edge_json(s.edge)},
                              {"swapped", s.swapped},
                              {"x_u", s.x_u},
                              {"x_v", s.x_v},
                              {"radius_after", s.radius_after},
                              {"increased", s.increased}});
    }
    Json j{{"p", r.p}, {"applicable", r.applicable}, {"hard", r.hard}, {"radius", r.radius},
           {"perron_positive", r.perron_positive}, {"ok", r.ok()}, {"shifts", std::move(shifts)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json to_json(const RegressionFit& f) {
    return Json{{"x", to_string(f.x)},      {"y", to_string(f.y)}, {"slope", f.slope}, {"intercept", f.intercept},
                {"pearson_r", f.pearson_r}, {"samples", f.sample_count}};
}

Json to_json(const FitComparison& c) {
    Json j = to_json(c.computed);
    j["table"] = to_string(c.published.table);
    j["printed"] = Json{{"slope", c.published.slope},
                        {"intercept", c.published.intercept},
                        {"pearson_r", optional_json(c.published.pearson_r)}};
    j["slope_deviation"] = c.slope_deviation;
    j["intercept_deviation"] = c.intercept_deviation;
    j["r_deviation"] = optional_json(c.r_deviation);
    j["within_tolerance"] = c.within_tolerance;
    return j;
}

Json to_json(const OctaneCrosscheck& c) {
    Json trees = Json::array();
    for (std::size_t t = 0; t < c.trees.size(); ++t) {
        Json j = to_json(c.trees[t]);
        j["xi1"] = c.tree_xi1[t];
        j["SE"] = c.tree_se[t];
        trees.push_back(std::move(j));
    }
    Json rows = Json::array();
    for (const auto& r : c.rows) {
        Json j{{"id", r.id}, {"xi1", r.table_xi1}, {"SE", r.table_se}, {"tree", optional_json(r.tree)}};
        if (!r.tree) {
            Json near = Json::array();
            for (const auto& cand : r.nearest) near.push_back(Json{{"tree", cand.tree}, {"distance", cand.distance}});
            j["nearest"] = std::move(near);
        }
        rows.push_back(std::move(j));
    }
    return Json{{"tolerance", c.tolerance},       {"ok", c.ok()},
                {"trees", std::move(trees)},      {"rows", std::move(rows)},
                {"unmatched_trees", c.unmatched_trees}};
}

}  // namespace psombor
