#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psombor/graph.hpp"

namespace psombor {

enum class Property { BP, AcenFac, Entropy, SNar, HNar, xi1, SE };
const char* to_string(Property prop);
std::optional<Property> parse_property(std::string_view name);

struct MoleculeRecord {
    std::string id;
    std::optional<std::string> name;
    std::optional<Graph> graph;
    std::map<Property, double> properties;

    std::optional<double> get(Property prop) const;
};

class DatasetError : public std::runtime_error {
public:
    DatasetError(std::size_t row, const std::string& what);
    std::size_t row() const { return row_; }  // 1-based, header is row 1

private:
    std::size_t row_;
};

struct Dataset {
    std::vector<MoleculeRecord> records;
    std::vector<std::string> warnings;
};

// CSV with a header row. Columns id and name are optional; other known
// columns are properties, unknown ones are ignored with a warning. Empty
// cells leave the property absent.
Dataset parse_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);

// Directory holding the bundled table files; PSOMBOR_DATA overrides it.
std::string default_data_dir();
Dataset load_benzenoid_table();
Dataset load_octane_table();

struct RegressionFit {
    Property x = Property::xi1;
    Property y = Property::BP;
    double slope = 0.0;
    double intercept = 0.0;
    double pearson_r = 0.0;
    std::size_t sample_count = 0;
};

// Ordinary least squares of y on x over records carrying both fields.
RegressionFit linear_fit(const std::vector<MoleculeRecord>& records, Property x, Property y);

enum class TableId { benzenoids, octanes };
const char* to_string(TableId table);

struct PublishedFit {
    TableId table;
    Property x;
    Property y;
    double slope;
    double intercept;
    std::optional<double> pearson_r;
};

// The ten fits printed with the data tables.
const std::vector<PublishedFit>& published_fits();

struct FitComparison {
    PublishedFit published;
    RegressionFit computed;
    double slope_deviation = 0.0;      // relative
    double intercept_deviation = 0.0;  // relative
    std::optional<double> r_deviation;  // absolute
    bool within_tolerance = false;
};

constexpr double kCoefficientTolerance = 5e-3;
constexpr double kPearsonTolerance = 5e-4;

std::vector<FitComparison> reproduce_published_fits(const std::vector<MoleculeRecord>& benzenoids,
                                                     const std::vector<MoleculeRecord>& octanes);
std::string fits_markdown(const std::vector<FitComparison>& fits);
void write_scatter_csv(std::ostream& out, const std::vector<MoleculeRecord>& records, Property x, Property y);

struct OctaneCandidate {
    std::size_t tree = 0;
    double distance = 0.0;  // max of the two absolute differences
};

struct OctaneRow {
    std::string id;
    double table_xi1 = 0.0;
    double table_se = 0.0;
    std::optional<std::size_t> tree;  // index into OctaneCrosscheck::trees
    std::vector<OctaneCandidate> nearest;  // filled for unmatched rows
};

struct OctaneCrosscheck {
    double tolerance = 1e-3;
    std::vector<Graph> trees;
    std::vector<double> tree_xi1;
    std::vector<double> tree_se;
    std::vector<OctaneRow> rows;
    std::vector<std::size_t> unmatched_trees;

    bool ok() const;
};

// Trees on 8 vertices with maximum degree 4 at p = 2, matched one-to-one to
// the table's (xi1, SE) pairs.
OctaneCrosscheck octane_crosscheck(const std::vector<MoleculeRecord>& octanes, double tolerance = 1e-3);

}  // namespace psombor
