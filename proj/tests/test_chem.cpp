#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "psombor/chem.hpp"
#include "psombor/extremal.hpp"

using namespace psombor;

namespace {

std::vector<MoleculeRecord> records_from(const std::vector<std::pair<double, double>>& xy) {
    std::vector<MoleculeRecord> out;
    for (std::size_t i = 0; i < xy.size(); ++i) {
        MoleculeRecord r;
        r.id = std::to_string(i + 1);
        r.properties[Property::xi1] = xy[i].first;
        r.properties[Property::BP] = xy[i].second;
        out.push_back(r);
    }
    return out;
}

Dataset parse(const std::string& text) {
    std::istringstream in(text);
    return parse_dataset(in);
}

}  // namespace

TEST_CASE("dataset parsing") {
    const Dataset ds = parse("id,name,xi1,BP,colour\n1,benzene,4.2,80.1,red\n2,,5.0,,blue\n");
    REQUIRE(ds.records.size() == 2);
    CHECK(ds.records[0].id == "1");
    CHECK(ds.records[0].name == "benzene");
    CHECK(ds.records[0].get(Property::BP) == 80.1);
    CHECK_FALSE(ds.records[1].name.has_value());
    CHECK_FALSE(ds.records[1].get(Property::BP).has_value());
    REQUIRE(ds.warnings.size() == 1);
    CHECK(ds.warnings[0].find("colour") != std::string::npos);

    try {
        parse("id,xi1\n1,2.0\n2,abc\n");
        FAIL("non-numeric cell accepted");
    } catch (const DatasetError& e) {
        CHECK(e.row() == 3);
    }
    CHECK_THROWS_AS(parse("id,xi1,BP\n1,2.0\n"), DatasetError);
    CHECK(parse("id,xi1\n").warnings.size() == 1);
    CHECK_THROWS(load_dataset("/nonexistent/table.csv"));

    CHECK(parse_property("HNar") == Property::HNar);
    CHECK_FALSE(parse_property("bp").has_value());
}

TEST_CASE("least squares on hand-computed data") {
    const auto fit = linear_fit(records_from({{0, 0}, {1, 1}, {2, 3}}), Property::xi1, Property::BP);
    CHECK(fit.slope == doctest::Approx(1.5));
    CHECK(fit.intercept == doctest::Approx(-1.0 / 6.0));
    CHECK(fit.pearson_r == doctest::Approx(3.0 / std::sqrt(2.0 * 42.0 / 9.0)));
    CHECK(fit.sample_count == 3);

    const auto exact = linear_fit(records_from({{1, 3}, {2, 5}, {4, 9}, {7, 15}}), Property::xi1, Property::BP);
    CHECK(exact.slope == doctest::Approx(2.0));
    CHECK(exact.intercept == doctest::Approx(1.0));
    CHECK(exact.pearson_r == doctest::Approx(1.0));

    CHECK_THROWS(linear_fit(records_from({{1, 1}, {2, 2}}), Property::xi1, Property::BP));
    CHECK_THROWS(linear_fit(records_from({{1, 1}, {1, 2}, {1, 3}}), Property::xi1, Property::BP));
}

TEST_CASE("fit properties") {
    const Dataset benz = load_benzenoid_table();
    const auto base = linear_fit(benz.records, Property::SE, Property::BP);

    // Pearson r is invariant under positive affine maps of x and flips sign under negative ones.
    for (double scale : {0.5, 3.0, -2.0}) {
        auto shifted = benz.records;
        for (auto& r : shifted) r.properties[Property::SE] = scale * *r.get(Property::SE) + 7.0;
        const auto fit = linear_fit(shifted, Property::SE, Property::BP);
        CHECK(fit.pearson_r == doctest::Approx(scale > 0 ? base.pearson_r : -base.pearson_r).epsilon(1e-12));
        CHECK(fit.slope == doctest::Approx(base.slope / scale).epsilon(1e-10));
    }

    // Residuals are orthogonal to the constant and to x.
    double sum = 0.0, dot = 0.0, scale = 0.0;
    for (const auto& r : benz.records) {
        const double x = *r.get(Property::SE);
        const double res = *r.get(Property::BP) - (base.slope * x + base.intercept);
        sum += res;
        dot += res * x;
        scale += std::abs(*r.get(Property::BP) * x);
    }
    CHECK(std::abs(sum) <= 1e-9 * scale);
    CHECK(std::abs(dot) <= 1e-9 * scale);
}

TEST_CASE("bundled tables") {
    const Dataset benz = load_benzenoid_table();
    const Dataset oct = load_octane_table();
    CHECK(benz.records.size() == 21);
    CHECK(oct.records.size() == 18);
    CHECK(benz.warnings.empty());
    CHECK(oct.warnings.empty());
    CHECK(oct.records[0].get(Property::xi1) == 5.2207);
    CHECK(oct.records[17].get(Property::SE) == 30.7246);

    const auto bp_se = linear_fit(benz.records, Property::SE, Property::BP);
    CHECK(bp_se.slope == doctest::Approx(4.658).epsilon(5e-3));
    CHECK(bp_se.intercept == doctest::Approx(31.24).epsilon(5e-3));
    CHECK(std::abs(bp_se.pearson_r - 0.9950) <= 5e-4);

    const auto fits = reproduce_published_fits(benz.records, oct.records);
    REQUIRE(fits.size() == 10);
    for (const auto& f : fits) {
        INFO(to_string(f.published.y), " ~ ", to_string(f.published.x));
        CHECK(f.within_tolerance);
        CHECK(f.computed.sample_count == (f.published.table == TableId::benzenoids ? 21u : 18u));
    }
    const std::string md = fits_markdown(fits);
    CHECK(md.find("BP ~ SE") != std::string::npos);
}

TEST_CASE("data directory override") {
    const auto dir = std::filesystem::temp_directory_path() / "psombor_data_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "table1_benzenoids.csv") << "id,BP,xi1,SE\n1,1,2,3\n2,2,3,4\n3,4,5,6\n";
    ::setenv("PSOMBOR_DATA", dir.c_str(), 1);
    CHECK(default_data_dir() == dir.string());
    CHECK(load_benzenoid_table().records.size() == 3);
    ::unsetenv("PSOMBOR_DATA");
    CHECK(load_benzenoid_table().records.size() == 21);
    std::filesystem::remove_all(dir);
}

TEST_CASE("scatter export") {
    std::ostringstream out;
    write_scatter_csv(out, records_from({{1.5, 2.0}, {2.0, 4.25}}), Property::xi1, Property::BP);
    CHECK(out.str() == "id,xi1,BP\n1,1.5,2\n2,2,4.25\n");
}

TEST_CASE("octane structures against the property table") {
    const auto cross = octane_crosscheck(load_octane_table().records);
    CHECK(cross.trees.size() == 18);
    REQUIRE(cross.rows.size() == 18);

    // The path is row 1 and the most branched skeleton is row 18.
    REQUIRE(cross.rows[0].tree.has_value());
    CHECK(cross.trees[*cross.rows[0].tree].max_degree() == 2);
    REQUIRE(cross.rows[17].tree.has_value());
    CHECK(cross.trees[*cross.rows[17].tree].max_degree() == 4);

    std::size_t matched = 0;
    for (const auto& row : cross.rows) {
        if (row.tree) {
            ++matched;
            CHECK(std::abs(cross.tree_xi1[*row.tree] - row.table_xi1) <= 1e-3);
            CHECK(std::abs(cross.tree_se[*row.tree] - row.table_se) <= 1e-3);
        } else {
            CHECK(row.nearest.size() == 3);
        }
    }
    // Row 9's printed pair belongs to no octane skeleton; the leftover tree
    // is 2,5-dimethylhexane.
    CHECK(matched == 17);
    CHECK_FALSE(cross.rows[8].tree.has_value());
    REQUIRE(cross.unmatched_trees.size() == 1);
    const Graph& leftover = cross.trees[cross.unmatched_trees[0]];
    std::vector<std::size_t> degrees = leftover.degrees();
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 3, 3});
    CHECK(cross.tree_xi1[cross.unmatched_trees[0]] == doctest::Approx(6.548579).epsilon(1e-6));
    CHECK_FALSE(cross.ok());
}
