#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "psombor/bounds.hpp"
#include "psombor/json_io.hpp"

using namespace psombor;

namespace {

const BoundReport& find(const std::vector<BoundReport>& reports, const std::string& id) {
    for (const auto& r : reports)
        if (r.check_id == id) return r;
    FAIL("missing report " << id);
    throw std::logic_error("unreachable");
}

bool tight(double a, double b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)); }

}  // namespace

TEST_CASE("K4 at p = 2 meets the regular equality cases") {
    const auto reports = check_all(complete_graph(4), 2.0, "K4");
    const double so = 18.0 * std::sqrt(2.0);

    const auto& linear = find(reports, "index.n2_linear");
    CHECK(linear.value == doctest::Approx(so));
    CHECK(tight(*linear.lower, so));
    CHECK(tight(*linear.upper, so));
    CHECK(linear.equality_expected == Side::both);
    CHECK(linear.equality_observed);
    CHECK(linear.status() == ReportStatus::pass);

    const auto& triangles = find(reports, "index.n3_triangles");
    CHECK(triangles.applicable);
    CHECK(tight(*triangles.lower, so));
    CHECK(tight(*triangles.upper, so));
    CHECK(triangles.status() == ReportStatus::pass);

    const auto& max_degree = find(reports, "laplacian.so_max_degree");
    CHECK(tight(*max_degree.upper, so));
    CHECK(max_degree.equality_observed);

    const auto& complete_max = find(reports, "index.complete_max");
    CHECK(complete_max.equality_observed);

    const auto& n2 = find(reports, "radius.n2_upper");
    CHECK(n2.value == doctest::Approx(9.0 * std::sqrt(2.0)));
    CHECK(n2.equality_observed);

    const auto& sum = find(reports, "ng.radius_sum_lower");
    CHECK(sum.value == doctest::Approx(12.727922).epsilon(1e-7));
    CHECK(tight(*sum.lower, sum.value));
    CHECK(sum.status() == ReportStatus::pass);

    for (const auto& r : reports) {
        INFO(r.check_id);
        CHECK(r.status() != ReportStatus::fail);
    }
}

TEST_CASE("named examples") {
    SUBCASE("variance identity on P4") {
        const auto& r = find(check_all(path_graph(4), 2.0), "index.variance_identity");
        CHECK(std::abs(r.value - *r.lower) <= 1e-10);
        CHECK(r.status() == ReportStatus::pass);
    }
    SUBCASE("bipartite sandwich on the star") {
        const auto& r = find(check_all(star_graph(4), 2.0), "laplacian.bipartite_sandwich");
        CHECK(r.value == doctest::Approx(3.0 * std::sqrt(10.0)));
        CHECK(tight(*r.upper, r.value));
        CHECK(r.equality_expected == Side::upper);
        CHECK(r.status() == ReportStatus::pass);
    }
    SUBCASE("adjacency sandwich on C5") {
        const auto& r = find(check_all(cycle_graph(5), 2.0), "radius.adjacency_sandwich");
        CHECK(r.value == doctest::Approx(4.0 * std::sqrt(2.0)));
        CHECK(tight(*r.lower, r.value));
        CHECK(tight(*r.upper, r.value));
    }
    SUBCASE("distinct eigenvalues on P4") {
        const auto& r = find(check_all(path_graph(4), 2.0), "radius.distinct_vs_diameter");
        CHECK(r.value == 4.0);
        CHECK(*r.lower == 4.0);
    }
    SUBCASE("minimum degree radius bound on C4") {
        const auto& r = find(check_all(cycle_graph(4), 2.0), "ng.radius_min_degree");
        CHECK(r.value == doctest::Approx(4.0 * std::sqrt(2.0)));
        CHECK(tight(*r.lower, r.value));
        CHECK(r.equality_observed);
    }
    SUBCASE("Estrada minus energy on 5K1") {
        const auto& r = find(check_all(empty_graph(5), 2.0), "estrada.minus_energy");
        CHECK(r.value == doctest::Approx(5.0));
        CHECK(*r.upper == doctest::Approx(5.0));
        CHECK(r.equality_observed);
        CHECK(r.status() == ReportStatus::pass);
    }
    SUBCASE("subdivision energy of C3") {
        const auto& r = find(check_all(cycle_graph(3), 2.0), "energy.subdivision");
        CHECK(r.value == doctest::Approx(16.0 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(*r.upper == doctest::Approx(24.0).epsilon(1e-12));
        CHECK(r.status() == ReportStatus::pass);
    }
    SUBCASE("triangle energy bound is only observed") {
        const auto reports = check_all(complete_graph(3), 2.0);
        const auto& n3 = find(reports, "energy.holder_n3");
        CHECK(n3.value == doctest::Approx(8.0 * std::sqrt(2.0)));
        CHECK(*n3.lower == doctest::Approx(2304.0 / (6.0 * std::pow(2.0 * std::sqrt(2.0), 3))).epsilon(1e-9));
        CHECK_FALSE(n3.holds);
        CHECK(n3.status() == ReportStatus::observed);
        const auto& n4 = find(reports, "energy.holder_n4");
        CHECK(*n4.lower == doctest::Approx(4.0 * std::sqrt(6.0)));
        CHECK(n4.status() == ReportStatus::pass);

        const auto cmp = compare_energy_lower_bounds(moments_closed_form(complete_graph(3), 2.0));
        CHECK(cmp.ratio == doctest::Approx(0.577).epsilon(1e-3));
        CHECK(cmp.tighter == TighterBound::holder_n3);
    }
    SUBCASE("trace sandwich is strict on a random tree") {
        const auto& r = find(check_all(random_tree(9, 4), 2.0), "laplacian.trace_sandwich");
        CHECK(r.applicable);
        CHECK(r.slack > 0.0);
    }
    SUBCASE("complement radius sum on a random connected graph") {
        Graph g;
        for (std::uint64_t seed = 3;; ++seed) {
            g = random_gnm(8, 12, seed);
            if (is_connected(g) && g.max_degree() <= 6) break;
        }
        const auto reports = check_all(g, 2.0);
        const auto& r = find(reports, "ng.radius_sum_upper");
        CHECK(r.applicable);
        CHECK(r.holds);
        CHECK(find(reports, "ng.radius_hong").holds);
    }
}

TEST_CASE("compare_energy_lower_bounds follows the moment ratio") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_gnm(8, 10 + seed % 15, seed);
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const MomentSet n = moments_closed_form(g, p);
            if (n[3] <= 0.0) continue;
            const auto cmp = compare_energy_lower_bounds(n);
            const double holder4 = std::sqrt(n[2] * n[2] * n[2] / n[4]);
            const double holder3 = n[2] * n[2] / n[3];
            if (cmp.tighter == TighterBound::holder_n4) CHECK(holder4 > holder3);
            if (cmp.tighter == TighterBound::holder_n3) CHECK(holder3 > holder4);
            CHECK((cmp.ratio > 1.0) == (holder4 > holder3));
        }
    }
}

TEST_CASE("degenerate graphs are not applicable") {
    for (const Graph& g : {empty_graph(1), empty_graph(4)}) {
        const auto reports = check_moment_index_bounds(GraphAnalysis(g, 2.0));
        for (const auto& r : reports) {
            INFO(r.check_id);
            CHECK_FALSE(r.applicable);
            CHECK(r.status() == ReportStatus::not_applicable);
            CHECK_FALSE(r.reason.empty());
        }
    }
    const auto lap = check_laplacian_bounds(GraphAnalysis(disjoint_union(complete_graph(3), complete_graph(3)), 2.0));
    CHECK_FALSE(find(lap, "laplacian.zero_simple").applicable);
    CHECK_FALSE(find(lap, "laplacian.trace_sandwich").applicable);
    CHECK(find(lap, "laplacian.trace_identity").applicable);

    CHECK_FALSE(find(check_all(path_graph(5), 2.0), "index.n3_triangles").applicable);
    CHECK_THROWS_AS(GraphAnalysis(path_graph(3), 0.0), DomainError);
}

TEST_CASE("p-domain of power-mean bounds") {
    const auto below = check_all(path_graph(6), 0.5);
    CHECK_FALSE(find(below, "laplacian.so_holder").hard);
    CHECK_FALSE(find(below, "index.isi").hard);
    const auto above = check_all(path_graph(6), 2.0);
    CHECK(find(above, "laplacian.so_holder").hard);
    CHECK(find(above, "radius.adjacency_sandwich").hard);
    CHECK(find(below, "radius.adjacency_sandwich").hard);
    CHECK_FALSE(find(above, "radius.randic").hard);
}

TEST_CASE("report status") {
    BoundReport r;
    r.holds = true;
    CHECK(r.status() == ReportStatus::pass);
    r.equality_expected = Side::upper;
    CHECK(r.status() == ReportStatus::fail);
    r.equality_observed = true;
    CHECK(r.status() == ReportStatus::pass);
    r.holds = false;
    CHECK(r.status() == ReportStatus::fail);
    r.hard = false;
    CHECK(r.status() == ReportStatus::observed);
    r.applicable = false;
    CHECK(r.status() == ReportStatus::not_applicable);
    CHECK(std::string(to_string(ReportStatus::observed)) == "observed");
}

TEST_CASE("suite over all trees has no violations") {
    const auto corpus = tree_corpus(4, 9);
    CHECK(corpus.size() == 2 + 3 + 6 + 11 + 23 + 47);
    const std::vector<double> ps{1.0, 2.0, 3.0};
    const auto result = run_suite(corpus, ps, {"trees", {}, 2, false});
    CHECK(result.report.ok());
    CHECK(result.report.violations.empty());
    std::size_t total = 0;
    for (const auto& [id, c] : result.report.per_check) {
        INFO(id);
        CHECK(c.total() == corpus.size() * ps.size());
        CHECK(c.equality_confirmed == c.equality_expected);
        total += c.total();
    }
    CHECK(total == result.report.report_count);
}

TEST_CASE("equality cases on graph families") {
    const auto corpus = family_corpus(8);
    const std::vector<double> ps{-1.0, 0.5, 1.0, 2.0, 3.0};
    const auto result = run_suite(corpus, ps, {"families", {}, 1, false});
    CHECK(result.report.ok());
    std::size_t expected = 0;
    for (const auto& [id, c] : result.report.per_check) {
        INFO(id);
        CHECK(c.equality_confirmed == c.equality_expected);
        expected += c.equality_expected;
    }
    CHECK(expected > 0);
}

TEST_CASE("suite output is independent of the job count") {
    const auto corpus = random_connected_corpus(8, 7, 20, 30, 42);
    const std::vector<double> ps{-1.0, 2.0};
    const auto one = run_suite(corpus, ps, {"r", {}, 1, true});
    const auto four = run_suite(corpus, ps, {"r", {}, 4, true});
    CHECK(to_json(one.report).dump() == to_json(four.report).dump());
    REQUIRE(one.reports.size() == four.reports.size());
    for (std::size_t i = 0; i < one.reports.size(); ++i) CHECK(one.reports[i].check_id == four.reports[i].check_id);
}

TEST_CASE("violations carry a reproduction payload") {
    // Demanding a positive margin turns every tight inequality into a failure.
    SuiteOptions options;
    options.bounds.holds_tol = -1e-3;
    const std::vector<NamedGraph> corpus{{"K4", complete_graph(4)}};
    const std::vector<double> ps{2.0};
    const auto result = run_suite(corpus, ps, options);
    CHECK_FALSE(result.report.ok());
    REQUIRE_FALSE(result.report.violations.empty());
    const auto& v = result.report.violations.front();
    CHECK(v.graph_id == "K4");
    CHECK(v.p == 2.0);
    CHECK(parse_edge_list(v.edge_list) == complete_graph(4));
}

TEST_CASE("directory corpus records unreadable entries") {
    const auto dir = std::filesystem::temp_directory_path() / "psombor_corpus_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "a.edges") << "0 1\n1 2\n";
    std::ofstream(dir / "b.edges") << "0 0\n";
    std::ofstream(dir / "c.json") << R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})";
    const auto load = directory_corpus(dir.string());
    REQUIRE(load.graphs.size() == 2);
    CHECK(load.graphs[0].graph == path_graph(3));
    CHECK(load.graphs[1].graph == complete_graph(3));
    REQUIRE(load.errors.size() == 1);
    CHECK(load.errors[0].find("b.edges") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corpora are reproducible") {
    const auto a = random_connected_corpus(8, 7, 20, 20, 9);
    const auto b = random_connected_corpus(8, 7, 20, 20, 9);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].graph == b[i].graph);
        CHECK(is_connected(a[i].graph));
        CHECK(a[i].graph.size() >= 7);
        CHECK(a[i].graph.size() <= 20);
    }
    const auto gnm = random_gnm_corpus(8, 10, 5, 100);
    CHECK(gnm[3].graph == random_gnm(8, 10, 103));
    CHECK(edgeless_corpus(2, 4).size() == 3);
}
