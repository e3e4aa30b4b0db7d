#include "psombor/chem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "psombor/extremal.hpp"
#include "psombor/invariants.hpp"
#include "psombor/spectral.hpp"

#ifndef PSOMBOR_DATA_DIR
#define PSOMBOR_DATA_DIR "data"
#endif

namespace psombor {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

const char* to_string(Property prop) {
    switch (prop) {
        case Property::BP: return "BP";
        case Property::AcenFac: return "AcenFac";
        case Property::Entropy: return "Entropy";
        case Property::SNar: return "SNar";
        case Property::HNar: return "HNar";
        case Property::xi1: return "xi1";
        case Property::SE: return "SE";
    }
    return "?";
}

std::optional<Property> parse_property(std::string_view name) {
    for (Property p : {Property::BP, Property::AcenFac, Property::Entropy, Property::SNar, Property::HNar,
                       Property::xi1, Property::SE}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

std::optional<double> MoleculeRecord::get(Property prop) const {
    const auto it = properties.find(prop);
    if (it == properties.end()) return std::nullopt;
    return it->second;
}

DatasetError::DatasetError(std::size_t row, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}

Dataset parse_dataset(std::istream& in) {
    Dataset ds;
    std::string line;
    std::size_t row = 0;
    bool have_header = false;
    std::vector<std::optional<Property>> columns;
    std::optional<std::size_t> id_col, name_col;

    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (!have_header) {
            have_header = true;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                columns.push_back(parse_property(cells[c]));
                if (cells[c] == "id") {
                    id_col = c;
                } else if (cells[c] == "name") {
                    name_col = c;
                } else if (!columns.back()) {
                    ds.warnings.push_back("unknown column '" + std::string(cells[c]) + "' ignored");
                }
            }
            continue;
        }
        if (cells.size() != columns.size()) {
            throw DatasetError(row, "expected " + std::to_string(columns.size()) + " cells, found " +
                                        std::to_string(cells.size()));
        }
        MoleculeRecord rec;
        rec.id = id_col ? std::string(cells[*id_col]) : std::to_string(ds.records.size() + 1);
        if (name_col && !cells[*name_col].empty()) rec.name = std::string(cells[*name_col]);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!columns[c] || cells[c].empty()) continue;
            const auto v = parse_number(cells[c]);
            if (!v) {
                throw DatasetError(row, "non-numeric value '" + std::string(cells[c]) + "' in column " +
                                            to_string(*columns[c]));
            }
            rec.properties[*columns[c]] = *v;
        }
        if (rec.properties.empty()) throw DatasetError(row, "no property values");
        ds.records.push_back(std::move(rec));
    }
    if (ds.records.empty()) ds.warnings.push_back(have_header ? "dataset has no rows" : "dataset is empty");
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset " + path);
    return parse_dataset(in);
}

std::string default_data_dir() {
    if (const char* env = std::getenv("PSOMBOR_DATA"); env && *env) return env;
    return PSOMBOR_DATA_DIR;
}

Dataset load_benzenoid_table() { return load_dataset(default_data_dir() + "/table1_benzenoids.csv"); }
Dataset load_octane_table() { return load_dataset(default_data_dir() + "/table2_octanes.csv"); }

RegressionFit linear_fit(const std::vector<MoleculeRecord>& records, Property x, Property y) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) {
        const auto xv = r.get(x);
        const auto yv = r.get(y);
        if (xv && yv) pts.emplace_back(*xv, *yv);
    }
    if (pts.size() < 3) throw std::invalid_argument("linear_fit needs at least 3 records with both fields");
    const double n = static_cast<double>(pts.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [a, b] : pts) {
        mx += a;
        my += b;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& [a, b] : pts) {
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
        sxy += (a - mx) * (b - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: x has zero variance");

    RegressionFit f;
    f.x = x;
    f.y = y;
    f.sample_count = pts.size();
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.pearson_r = syy == 0.0 ? 0.0 : sxy / std::sqrt(sxx * syy);
    f.pearson_r = std::clamp(f.pearson_r, -1.0, 1.0);
    return f;
}

const char* to_string(TableId table) { return table == TableId::benzenoids ? "benzenoids" : "octanes"; }

const std::vector<PublishedFit>& published_fits() {
    static const std::vector<PublishedFit> fits = {
        {TableId::benzenoids, Property::SE, Property::BP, 4.658, 31.24, 0.9950},
        {TableId::benzenoids, Property::xi1, Property::BP, 134.6, -844.0, 0.8936},
        {TableId::octanes, Property::xi1, Property::AcenFac, -0.02465, 0.5263, std::nullopt},
        {TableId::octanes, Property::xi1, Property::Entropy, -2.978, 128.4, std::nullopt},
        {TableId::octanes, Property::xi1, Property::SNar, -0.2231, 5.256, std::nullopt},
        {TableId::octanes, Property::xi1, Property::HNar, -0.05843, 1.86, std::nullopt},
        {TableId::octanes, Property::SE, Property::AcenFac, -0.021, 0.9109, std::nullopt},
        {TableId::octanes, Property::SE, Property::Entropy, -2.565, 175.7, std::nullopt},
        {TableId::octanes, Property::SE, Property::SNar, -0.19, 8.735, std::nullopt},
        {TableId::octanes, Property::SE, Property::HNar, -0.04981, 2.772, std::nullopt},
    };
    return fits;
}

std::vector<FitComparison> reproduce_published_fits(const std::vector<MoleculeRecord>& benzenoids,
                                                     const std::vector<MoleculeRecord>& octanes) {
    std::vector<FitComparison> out;
    for (const PublishedFit& pf : published_fits()) {
        FitComparison c;
        c.published = pf;
        c.computed = linear_fit(pf.table == TableId::benzenoids ? benzenoids : octanes, pf.x, pf.y);
        c.slope_deviation = std::abs(c.computed.slope - pf.slope) / std::abs(pf.slope);
        c.intercept_deviation = std::abs(c.computed.intercept - pf.intercept) / std::abs(pf.intercept);
        if (pf.pearson_r) c.r_deviation = std::abs(c.computed.pearson_r - *pf.pearson_r);
        c.within_tolerance = c.slope_deviation <= kCoefficientTolerance &&
                             c.intercept_deviation <= kCoefficientTolerance &&
                             (!c.r_deviation || *c.r_deviation <= kPearsonTolerance);
        out.push_back(c);
    }
    return out;
}

std::string fits_markdown(const std::vector<FitComparison>& fits) {
    std::ostringstream out;
    out << "| fit | slope (printed) | slope | intercept (printed) | intercept | R (printed) | R | within |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : fits) {
        out << "| " << to_string(c.published.y) << " ~ " << to_string(c.published.x) << " | "
            << fmt("%.6g", c.published.slope) << " | " << fmt("%.6f", c.computed.slope) << " | "
            << fmt("%.6g", c.published.intercept) << " | " << fmt("%.6f", c.computed.intercept) << " | "
            << (c.published.pearson_r ? fmt("%.4f", *c.published.pearson_r) : std::string("-")) << " | "
            << fmt("%.6f", c.computed.pearson_r) << " | " << (c.within_tolerance ? "yes" : "no") << " |\n";
    }
    return out.str();
}

void write_scatter_csv(std::ostream& out, const std::vector<MoleculeRecord>& records, Property x, Property y) {
    out << "id," << to_string(x) << ',' << to_string(y) << '\n';
    for (const auto& r : records) {
        const auto xv = r.get(x);
        const auto yv = r.get(y);
        if (xv && yv) out << r.id << ',' << fmt("%.17g", *xv) << ',' << fmt("%.17g", *yv) << '\n';
    }
}

bool OctaneCrosscheck::ok() const {
    if (trees.size() != rows.size()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const OctaneRow& r) { return r.tree.has_value(); }) &&
           unmatched_trees.empty();
}

OctaneCrosscheck octane_crosscheck(const std::vector<MoleculeRecord>& octanes, double tolerance) {
    OctaneCrosscheck cc;
    cc.tolerance = tolerance;
    cc.trees = enumerate_trees(8, 4).trees;
    for (const Graph& t : cc.trees) {
        const auto inv = spectral_invariants(sombor_spectrum(t, 2.0));
        cc.tree_xi1.push_back(inv.radius);
        cc.tree_se.push_back(inv.energy);
    }
    for (const auto& rec : octanes) {
        OctaneRow row;
        row.id = rec.id;
        row.table_xi1 = rec.get(Property::xi1).value_or(NAN);
        row.table_se = rec.get(Property::SE).value_or(NAN);
        cc.rows.push_back(row);
    }

    const std::size_t nr = cc.rows.size();
    const std::size_t nt = cc.trees.size();
    auto distance = [&](std::size_t r, std::size_t t) {
        return std::max(std::abs(cc.rows[r].table_xi1 - cc.tree_xi1[t]), std::abs(cc.rows[r].table_se - cc.tree_se[t]));
    };

    // Maximum bipartite matching by augmenting paths, rows and trees in order.
    std::vector<std::optional<std::size_t>> tree_row(nt);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
        for (std::size_t t = 0; t < nt; ++t) {
            if (seen[t] || !(distance(r, t) <= tolerance)) continue;
            seen[t] = true;
            if (!tree_row[t] || augment(*tree_row[t], seen)) {
                tree_row[t] = r;
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < nr; ++r) {
        std::vector<bool> seen(nt, false);
        augment(r, seen);
    }
    for (std::size_t t = 0; t < nt; ++t) {
        if (tree_row[t]) {
            cc.rows[*tree_row[t]].tree = t;
        } else {
            cc.unmatched_trees.push_back(t);
        }
    }
    for (std::size_t r = 0; r < nr; ++r) {
        if (cc.rows[r].tree) continue;
        std::vector<OctaneCandidate> cands;
        for (std::size_t t = 0; t < nt; ++t) cands.push_back({t, distance(r, t)});
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& a, const auto& b) { return a.distance < b.distance; });
        cands.resize(std::min<std::size_t>(3, cands.size()));
        cc.rows[r].nearest = std::move(cands);
    }
    return cc;
}

}  // namespace psombor
