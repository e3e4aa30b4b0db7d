#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "psombor/bounds.hpp"
#include "psombor/chem.hpp"
#include "psombor/extremal.hpp"
#include "psombor/graph.hpp"
#include "psombor/invariants.hpp"
#include "psombor/json_io.hpp"
#include "psombor/spectral.hpp"

namespace psombor::cli {

std::vector<double> parse_p_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.empty()) throw UsageError("empty entry in p list '" + std::string(text) + "'");
        errno = 0;
        char* end = nullptr;
        const double p = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size() || errno == ERANGE || !std::isfinite(p)) {
            throw UsageError("invalid p value '" + token + "'");
        }
        if (p == 0.0) throw UsageError("p must be non-zero");
        out.push_back(p);
        pos = comma + 1;
    }
    return out;
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("invalid range '" + std::string(text) + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = number(text);
        return {v, v};
    }
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "table") return Format::table;
    if (text == "csv") return Format::csv;
    return std::nullopt;
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : std::string("-"); }

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string full(const std::optional<double>& v) { return v ? full(*v) : std::string(); }

std::string padded(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string join(const std::vector<double>& values, const char* sep, std::string (*fmt)(double)) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += fmt(values[i]);
    }
    return out;
}

std::string fixed6_plain(double v) { return fixed6(v); }

std::string compact_edges(const Graph& g) {
    std::string s;
    for (const Edge& e : g.edges()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e.u) + '-' + std::to_string(e.v);
    }
    return s;
}

// Multi-line edge-list text on one line: "n=4; 0 1; 0 2".
std::string one_line(const std::string& text) {
    std::string s;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        if (!s.empty()) s += "; ";
        s += line;
    }
    return s;
}

Json envelope(const char* command) { return Json{{"schema", 1}, {"command", command}}; }

struct Common {
    std::string format = "json";
    std::string out_path;
    std::optional<double> tol;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--out", c.out_path, "also write the output to this file");
    sub->add_option("--tol", c.tol, "relative tolerance for inequalities and equality cases; negative demands a strict margin");
}

struct Emitted {
    std::string text;
    int code = kExitOk;
};

Graph load_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    if (!std::filesystem::is_regular_file(path)) throw std::runtime_error("cannot open graph file " + path);
    return read_graph_file(path);
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
    std::string input;
    std::string p = "2";
    std::string matrix = "sombor";
    bool vectors = false;
};

Emitted run_spectrum(const SpectrumArgs& a, Format format) {
    const Graph g = load_graph(a.input);
    const auto ps = parse_p_list(a.p);
    const StructureStats stats = structure_stats(g);

    struct Row {
        std::optional<double> p;
        SymMatrix matrix;
        SpectralDecomposition dec;
        SpectralInvariants inv;
        std::optional<IndexBundle> indices;
        std::optional<MomentSet> moments;
    };
    std::vector<Row> rows;
    auto add = [&](std::optional<double> p, SymMatrix m, MatrixKind kind) {
        Row r;
        r.p = p;
        r.dec = eigen_decompose(m, a.vectors, kind, p);
        r.matrix = std::move(m);
        r.inv = spectral_invariants(r.dec);
        if (p) {
            r.indices = index_bundle(g, *p);
            if (kind == MatrixKind::p_sombor) r.moments = moments_closed_form(g, *p);
        }
        rows.push_back(std::move(r));
    };
    if (a.matrix == "adjacency") {
        add(std::nullopt, adjacency_matrix(g), MatrixKind::adjacency);
    } else {
        for (double p : ps) {
            if (a.matrix == "laplacian") add(p, sombor_laplacian(g, p), MatrixKind::p_laplacian);
            else add(p, sombor_matrix(g, p), MatrixKind::p_sombor);
        }
    }

    std::ostringstream os;
    if (format == Format::json) {
        Json j = envelope("spectrum");
        j["input"] = a.input;
        j["graph"] = to_json(g);
        j["structure"] = to_json(stats);
        Json results = Json::array();
        for (const auto& r : rows) {
            Json m = Json::array();
            for (std::size_t i = 0; i < r.matrix.order(); ++i) {
                Json row = Json::array();
                for (std::size_t k = 0; k < r.matrix.order(); ++k) row.push_back(r.matrix(i, k));
                m.push_back(std::move(row));
            }
            Json entry{{"p", r.p ? Json(*r.p) : Json(nullptr)}, {"matrix", std::move(m)}};
            entry["spectrum"] = to_json(r.dec);
            entry["invariants"] = to_json(r.inv);
            if (r.indices) entry["indices"] = to_json(*r.indices);
            if (r.moments) {
                Json from_spectrum = Json::array();
                for (int k = 0; k <= 4; ++k) from_spectrum.push_back(moment_from_spectrum(r.dec, k));
                entry["moments"] = Json{{"closed_form", Json(r.moments->n)}, {"spectrum", std::move(from_spectrum)}};
            }
            results.push_back(std::move(entry));
        }
        j["results"] = std::move(results);
        os << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        os << "p,matrix,k,eigenvalue\n";
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.dec.values.size(); ++k) {
                os << full(r.p) << ',' << to_string(r.dec.kind) << ',' << k << ',' << full(r.dec.values[k]) << '\n';
            }
        }
    } else {
        os << "graph " << a.input << "  n=" << g.order() << "  m=" << g.size() << "  connected="
           << (stats.is_connected ? "yes" : "no") << '\n';
        for (const auto& r : rows) {
            os << '\n' << to_string(r.dec.kind);
            if (r.p) os << "  p=" << fixed6(*r.p);
            os << '\n';
            os << "  matrix\n";
            for (std::size_t i = 0; i < r.matrix.order(); ++i) {
                os << "   ";
                for (std::size_t k = 0; k < r.matrix.order(); ++k) os << ' ' << right(fixed6(r.matrix(i, k)), 11);
                os << '\n';
            }
            os << "  eigenvalues  " << join(r.dec.values, " ", fixed6_plain) << '\n';
            if (r.dec.vectors) {
                for (std::size_t k = 0; k < r.dec.vectors->size(); ++k) {
                    os << "  x" << k << "  " << join((*r.dec.vectors)[k], " ", fixed6_plain) << '\n';
                }
            }
            os << "  inertia      +" << r.dec.inertia.positive << " 0:" << r.dec.inertia.zero << " -"
               << r.dec.inertia.negative << '\n';
            os << "  radius       " << fixed6(r.inv.radius) << '\n';
            os << "  spread       " << fixed6(r.inv.spread) << '\n';
            os << "  energy       " << fixed6(r.inv.energy) << '\n';
            os << "  estrada      " << fixed6(r.inv.estrada) << (r.inv.estrada_overflow_risk ? "  (overflow risk)" : "")
               << '\n';
            os << "  |det|        " << fixed6(r.inv.abs_det) << '\n';
            if (r.indices) {
                os << "  SO_p         " << fixed6(r.indices->so_p) << '\n';
                os << "  M1           " << fixed6(r.indices->m1) << '\n';
                os << "  ISI          " << fixed6(r.indices->isi) << '\n';
                os << "  Randic       " << fixed6(r.indices->randic) << '\n';
            }
            if (r.moments) {
                std::vector<double> n(r.moments->n.begin(), r.moments->n.end());
                os << "  N_0..N_4     " << join(n, " ", fixed6_plain) << '\n';
            }
        }
    }
    return {os.str(), kExitOk};
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> corpora;
    std::vector<std::string> inputs;
    std::string dir;
    std::string n;
    std::string m;
    std::size_t count = 200;
    std::string p = "2";
    std::uint64_t seed = 42;
    unsigned jobs = 1;
};

struct BuiltCorpus {
    std::vector<NamedGraph> graphs;
    std::vector<std::string> load_errors;
    std::vector<std::string> parts;
};

BuiltCorpus build_corpus(const VerifyArgs& a) {
    BuiltCorpus c;
    auto append = [&](std::vector<NamedGraph> more) {
        for (auto& g : more) c.graphs.push_back(std::move(g));
    };
    auto range_or = [&](std::size_t lo, std::size_t hi) {
        return a.n.empty() ? std::pair{lo, hi} : parse_range(a.n);
    };
    auto m_range_or = [&](std::size_t lo, std::size_t hi) {
        return a.m.empty() ? std::pair{lo, hi} : parse_range(a.m);
    };
    auto corpora = a.corpora;
    if (corpora.empty() && a.inputs.empty() && a.dir.empty()) corpora.push_back("trees");

    for (const auto& name : corpora) {
        if (name == "trees") {
            auto [lo, hi] = range_or(4, 9);
            if (lo < kMinTreeOrder || hi > kMaxTreeOrder) {
                throw UsageError("tree orders must lie in " + std::to_string(kMinTreeOrder) + ".." +
                                 std::to_string(kMaxTreeOrder));
            }
            append(tree_corpus(lo, hi));
            c.parts.push_back("trees n=" + std::to_string(lo) + ".." + std::to_string(hi));
        } else if (name == "families") {
            auto n_max = range_or(10, 10).second;
            append(family_corpus(n_max));
            c.parts.push_back("families n<=" + std::to_string(n_max));
        } else if (name == "edgeless") {
            auto [lo, hi] = range_or(2, 10);
            append(edgeless_corpus(lo, hi));
            c.parts.push_back("edgeless n=" + std::to_string(lo) + ".." + std::to_string(hi));
        } else if (name == "random") {
            auto n = range_or(8, 8).first;
            auto [lo, hi] = m_range_or(n - 1, 20);
            append(random_connected_corpus(n, lo, hi, a.count, a.seed));
            c.parts.push_back(std::to_string(a.count) + " connected G(" + std::to_string(n) + ",m) m=" +
                              std::to_string(lo) + ".." + std::to_string(hi) + " seed=" + std::to_string(a.seed));
        } else if (name == "gnm") {
            auto n = range_or(8, 8).first;
            auto m = m_range_or(10, 10).first;
            append(random_gnm_corpus(n, m, a.count, a.seed));
            c.parts.push_back(std::to_string(a.count) + " G(" + std::to_string(n) + "," + std::to_string(m) +
                              ") seed=" + std::to_string(a.seed));
        } else if (name == "subdivision") {
            auto n_max = range_or(8, 8).second;
            append(subdivision_corpus(n_max));
            c.parts.push_back("subdivision sources n<=" + std::to_string(n_max));
        } else if (name == "acceptance") {
            append(tree_corpus(4, 9));
            append(family_corpus(10));
            append(edgeless_corpus(2, 10));
            append(random_connected_corpus(8, 7, 20, 200, a.seed));
            append(subdivision_corpus(8));
            c.parts.push_back("acceptance (trees 4..9, families n<=10, edgeless, 200 connected G(8,7..20), "
                              "subdivision sources) seed=" + std::to_string(a.seed));
        } else {
            throw UsageError("unknown corpus '" + name +
                             "' (trees, families, edgeless, random, gnm, subdivision, acceptance)");
        }
    }
    if (!a.dir.empty()) {
        if (!std::filesystem::is_directory(a.dir)) throw std::runtime_error("cannot open corpus directory " + a.dir);
        auto load = directory_corpus(a.dir);
        append(std::move(load.graphs));
        c.load_errors = std::move(load.errors);
        c.parts.push_back("directory " + a.dir);
    }
    for (const auto& path : a.inputs) {
        c.graphs.push_back({path, load_graph(path)});
        c.parts.push_back(path);
    }
    return c;
}

Emitted run_verify(const VerifyArgs& a, Format format, const BoundOptions& bounds) {
    const auto ps = parse_p_list(a.p);
    BuiltCorpus corpus = build_corpus(a);

    SuiteOptions options;
    for (std::size_t i = 0; i < corpus.parts.size(); ++i) {
        if (i) options.description += "; ";
        options.description += corpus.parts[i];
    }
    options.bounds = bounds;
    options.jobs = a.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.jobs;
    SuiteResult result = run_suite(corpus.graphs, ps, options);
    SuiteReport& report = result.report;
    report.load_errors.insert(report.load_errors.end(), corpus.load_errors.begin(), corpus.load_errors.end());

    std::ostringstream os;
    if (format == Format::json) {
        Json j = envelope("verify");
        j["suite"] = to_json(report);
        os << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        os << "check,pass,fail,not_applicable,observed,observed_violations,equality_expected,"
              "equality_confirmed,min_relative_slack\n";
        for (const auto& [id, c] : report.per_check) {
            os << id << ',' << c.passed << ',' << c.failed << ',' << c.not_applicable << ',' << c.observed << ','
               << c.observed_violations << ',' << c.equality_expected << ',' << c.equality_confirmed << ','
               << full(c.min_relative_slack) << '\n';
        }
    } else {
        os << "suite    " << report.description << '\n';
        os << "graphs   " << report.graph_count << "   p " << join(report.p_values, ",", fixed6_plain)
           << "   reports " << report.report_count << '\n';
        os << '\n'
           << padded("check", 34) << right("pass", 7) << right("fail", 6) << right("n/a", 7) << right("obs", 7)
           << right("obs-viol", 9) << right("equality", 11) << right("min-slack", 12) << '\n';
        for (const auto& [id, c] : report.per_check) {
            const std::string eq = std::to_string(c.equality_confirmed) + "/" + std::to_string(c.equality_expected);
            os << padded(id, 34) << right(std::to_string(c.passed), 7) << right(std::to_string(c.failed), 6)
               << right(std::to_string(c.not_applicable), 7) << right(std::to_string(c.observed), 7)
               << right(std::to_string(c.observed_violations), 9) << right(eq, 11)
               << right(fixed6(c.min_relative_slack), 12) << '\n';
        }
        auto list = [&](const char* title, const std::vector<Violation>& vs) {
            os << '\n' << title << ": " << vs.size() << '\n';
            for (const auto& v : vs) {
                os << "  " << v.check_id << "  " << v.graph_id << "  p=" << fixed6(v.p) << "  value=" << fixed6(v.value)
                   << "  lower=" << fixed6(v.lower) << "  upper=" << fixed6(v.upper) << "  slack=" << fixed6(v.slack)
                   << (v.equality_only ? "  (equality missed)" : "") << '\n';
                os << "    edges " << one_line(v.edge_list) << '\n';
            }
        };
        list("violations", report.violations);
        list("observed violations (not asserted)", report.observations);
        if (!report.load_errors.empty()) {
            os << "\nload errors: " << report.load_errors.size() << '\n';
            for (const auto& e : report.load_errors) os << "  " << e << '\n';
        }
        if (!report.evaluation_errors.empty()) {
            os << "\nevaluation errors: " << report.evaluation_errors.size() << '\n';
            for (const auto& e : report.evaluation_errors) os << "  " << e << '\n';
        }
        os << '\n' << (report.ok() ? "OK" : "FAILED") << '\n';
    }
    return {os.str(), report.ok() ? kExitOk : kExitViolation};
}

// ---- trees -----------------------------------------------------------------

struct TreesArgs {
    std::string n = "8";
    std::size_t max_degree = 0;
    bool has_max_degree = false;
    bool verify = false;
    std::size_t shift = 0;
    std::string archive;
    std::string p = "2";
    std::uint64_t seed = 42;
};

void write_archive(const std::string& dir, const TreeCatalog& cat) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "tree%zu-%03zu.edges", cat.n, i);
        const auto path = std::filesystem::path(dir) / name;
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << "# " << cat.canonical_keys[i] << '\n';
        write_edge_list(f, cat.trees[i]);
        if (!f) throw std::runtime_error("cannot write " + path.string());
    }
}

Emitted run_trees(const TreesArgs& a, Format format) {
    const auto [lo, hi] = parse_range(a.n);
    if (lo < kMinTreeOrder || hi > kMaxTreeOrder) {
        throw UsageError("tree orders must lie in " + std::to_string(kMinTreeOrder) + ".." +
                         std::to_string(kMaxTreeOrder));
    }
    const auto ps = parse_p_list(a.p);
    const std::optional<std::size_t> max_degree =
        a.has_max_degree ? std::optional<std::size_t>(a.max_degree) : std::nullopt;

    std::vector<TreeCatalog> catalogs;
    std::vector<TreeExtremes> extremes;
    struct ShiftRow {
        std::size_t n;
        std::uint64_t seed;
        ShiftReport report;
    };
    std::vector<ShiftRow> shifts;
    bool failed = false;
    for (std::size_t n = lo; n <= hi; ++n) {
        catalogs.push_back(enumerate_trees(n, max_degree));
        if (!a.archive.empty()) write_archive(a.archive, catalogs.back());
        if (a.verify) {
            for (double p : ps) {
                extremes.push_back(verify_tree_extremes(n, p));
                if (extremes.back().hard && !extremes.back().ok()) failed = true;
            }
        }
        for (std::size_t i = 0; i < a.shift; ++i) {
            const Graph t = random_tree(n, a.seed + i);
            for (double p : ps) {
                ShiftRow row{n, a.seed + i, shift_experiment(t, p)};
                if (row.report.hard && !row.report.ok()) failed = true;
                shifts.push_back(std::move(row));
            }
        }
    }

    std::ostringstream os;
    if (format == Format::json) {
        Json j = envelope("trees");
        Json cats = Json::array();
        for (const auto& c : catalogs) cats.push_back(to_json(c));
        j["catalogs"] = std::move(cats);
        if (a.verify) {
            Json ex = Json::array();
            for (const auto& e : extremes) ex.push_back(to_json(e));
            j["extremes"] = std::move(ex);
        }
        if (a.shift > 0) {
            Json sh = Json::array();
            for (const auto& s : shifts) {
                Json entry = to_json(s.report);
                entry["n"] = s.n;
                entry["seed"] = s.seed;
                sh.push_back(std::move(entry));
            }
            j["shifts"] = std::move(sh);
        }
        j["ok"] = !failed;
        os << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        os << "n,index,key,edges\n";
        for (const auto& c : catalogs) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                os << c.n << ',' << i << ',' << c.canonical_keys[i] << ',' << compact_edges(c.trees[i]) << '\n';
            }
        }
    } else {
        for (const auto& c : catalogs) {
            os << "n=" << c.n;
            if (c.max_degree) os << "  max_degree=" << *c.max_degree;
            os << "  trees=" << c.size() << '\n';
            for (std::size_t i = 0; i < c.size(); ++i) {
                os << "  " << right(std::to_string(i), 4) << "  " << padded(c.canonical_keys[i], 2 * c.n + 2)
                   << compact_edges(c.trees[i]) << '\n';
            }
        }
        if (a.verify) {
            os << "\nextremes of the p-Sombor spectral radius\n";
            for (const auto& e : extremes) {
                os << "  n=" << e.n << "  p=" << fixed6(e.p) << "  trees=" << e.tree_count
                   << "  min=" << fixed6(e.min_radius) << (e.min_is_path ? " (path" : " (not path")
                   << (e.min_attained == 1 ? ", unique)" : ", shared)") << "  max=" << fixed6(e.max_radius)
                   << (e.max_is_star ? " (star" : " (not star") << (e.max_attained == 1 ? ", unique)" : ", shared)")
                   << (e.hard ? "" : "  [observed]") << (e.ok() ? "" : "  FAIL") << '\n';
            }
        }
        if (a.shift > 0) {
            os << "\nbridge shifts on random trees\n";
            for (const auto& s : shifts) {
                std::size_t up = 0;
                for (const auto& o : s.report.shifts) up += o.increased ? 1 : 0;
                os << "  n=" << s.n << "  seed=" << s.seed << "  p=" << fixed6(s.report.p)
                   << "  radius=" << fixed6(s.report.radius) << "  increased " << up << "/" << s.report.shifts.size()
                   << (s.report.applicable ? "" : "  (" + s.report.reason + ")")
                   << (s.report.hard ? "" : "  [observed]") << (s.report.ok() ? "" : "  FAIL") << '\n';
            }
        }
    }
    return {os.str(), failed ? kExitViolation : kExitOk};
}

// ---- regress ---------------------------------------------------------------

struct RegressArgs {
    std::string data;
    std::string table;
    std::string x;
    std::string y;
    std::string scatter;
};

Dataset load_named_table(const std::string& name) {
    if (name == "benzenoids") return load_benzenoid_table();
    if (name == "octanes") return load_octane_table();
    throw UsageError("unknown table '" + name + "' (benzenoids, octanes)");
}

Emitted run_regress(const RegressArgs& a, Format format) {
    if (a.data.empty() == a.table.empty()) throw UsageError("give exactly one of --data or --table");
    const auto x = parse_property(a.x);
    const auto y = parse_property(a.y);
    if (!x) throw UsageError("unknown property '" + a.x + "'");
    if (!y) throw UsageError("unknown property '" + a.y + "'");
    const Dataset ds = a.data.empty() ? load_named_table(a.table) : load_dataset(a.data);
    const RegressionFit fit = linear_fit(ds.records, *x, *y);
    if (!a.scatter.empty()) {
        std::ofstream f(a.scatter);
        if (!f) throw std::runtime_error("cannot write " + a.scatter);
        write_scatter_csv(f, ds.records, *x, *y);
    }

    std::ostringstream os;
    if (format == Format::json) {
        Json j = envelope("regress");
        j["source"] = a.data.empty() ? a.table : a.data;
        j["fit"] = to_json(fit);
        j["warnings"] = ds.warnings;
        os << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        os << "x,y,slope,intercept,pearson_r,samples\n"
           << to_string(fit.x) << ',' << to_string(fit.y) << ',' << full(fit.slope) << ',' << full(fit.intercept)
           << ',' << full(fit.pearson_r) << ',' << fit.sample_count << '\n';
    } else {
        os << to_string(fit.y) << " = " << fixed6(fit.slope) << " * " << to_string(fit.x) << " + "
           << fixed6(fit.intercept) << "   R=" << fixed6(fit.pearson_r) << "   samples=" << fit.sample_count << '\n';
        for (const auto& w : ds.warnings) os << "warning: " << w << '\n';
    }
    return {os.str(), kExitOk};
}

// ---- reproduce -------------------------------------------------------------

struct ReproduceArgs {
    std::string data_dir;
    double match_tol = 1e-3;
};

Emitted run_reproduce(const ReproduceArgs& a, Format format) {
    Dataset benz;
    Dataset oct;
    if (a.data_dir.empty()) {
        benz = load_benzenoid_table();
        oct = load_octane_table();
    } else {
        benz = load_dataset((std::filesystem::path(a.data_dir) / "table1_benzenoids.csv").string());
        oct = load_dataset((std::filesystem::path(a.data_dir) / "table2_octanes.csv").string());
    }
    const auto fits = reproduce_published_fits(benz.records, oct.records);
    const auto cross = octane_crosscheck(oct.records, a.match_tol);
    const bool fits_ok = std::all_of(fits.begin(), fits.end(), [](const FitComparison& f) { return f.within_tolerance; });

    std::ostringstream os;
    if (format == Format::json) {
        Json j = envelope("reproduce");
        Json fj = Json::array();
        for (const auto& f : fits) fj.push_back(to_json(f));
        j["fits"] = std::move(fj);
        j["fits_within_tolerance"] = fits_ok;
        j["octanes"] = to_json(cross);
        j["octanes_matched"] = cross.ok();
        os << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        os << "table,x,y,slope,intercept,pearson_r,printed_slope,printed_intercept,printed_r,within_tolerance\n";
        for (const auto& f : fits) {
            os << to_string(f.published.table) << ',' << to_string(f.computed.x) << ',' << to_string(f.computed.y)
               << ',' << full(f.computed.slope) << ',' << full(f.computed.intercept) << ','
               << full(f.computed.pearson_r) << ',' << full(f.published.slope) << ','
               << full(f.published.intercept) << ',' << full(f.published.pearson_r) << ','
               << (f.within_tolerance ? "true" : "false") << '\n';
        }
    } else {
        os << fits_markdown(fits) << '\n';
        os << "fits within tolerance: " << (fits_ok ? "yes" : "no") << "\n\n";
        os << "octane trees (n=8, max degree 4, p=2): " << cross.trees.size() << "   match tolerance "
           << fixed6(cross.tolerance) << '\n';
        for (const auto& row : cross.rows) {
            os << "  row " << padded(row.id, 4) << " xi1=" << fixed6(row.table_xi1) << " SE=" << fixed6(row.table_se);
            if (row.tree) {
                os << "  -> tree " << *row.tree << "  " << compact_edges(cross.trees[*row.tree]) << '\n';
            } else {
                os << "  -> no tree within tolerance; nearest:";
                for (const auto& c : row.nearest) {
                    os << "  tree " << c.tree << " (xi1=" << fixed6(cross.tree_xi1[c.tree])
                       << " SE=" << fixed6(cross.tree_se[c.tree]) << ")";
                }
                os << '\n';
            }
        }
        for (std::size_t t : cross.unmatched_trees) {
            os << "  unmatched tree " << t << "  xi1=" << fixed6(cross.tree_xi1[t]) << " SE=" << fixed6(cross.tree_se[t])
               << "  " << compact_edges(cross.trees[t]) << '\n';
        }
        os << "octane rows matched one-to-one: " << (cross.ok() ? "yes" : "no") << '\n';
    }
    return {os.str(), kExitOk};
}

std::optional<double> tolerance_from_env() {
    const char* raw = std::getenv(kToleranceEnv);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (*end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw UsageError(std::string("invalid ") + kToleranceEnv + " value '" + raw + "'");
    }
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-Sombor spectra, bound verification, tree extremes and QSPR fits", "psombor"};
    app.require_subcommand(1);

    Common common;
    SpectrumArgs spectrum;
    VerifyArgs verify;
    TreesArgs trees;
    RegressArgs regress;
    ReproduceArgs reproduce;

    auto* sp = app.add_subcommand("spectrum", "matrix, eigenvalues and invariants of one graph");
    sp->add_option("--input", spectrum.input, "edge-list or .json graph file, - for stdin")->required();
    sp->add_option("--p", spectrum.p, "comma-separated p values");
    sp->add_option("--matrix", spectrum.matrix, "sombor, laplacian or adjacency")
        ->check(CLI::IsMember({"sombor", "laplacian", "adjacency"}));
    sp->add_flag("--vectors", spectrum.vectors, "include eigenvectors");
    add_common(sp, common);

    auto* ve = app.add_subcommand("verify", "run every bound check over a corpus");
    ve->add_option("--corpus", verify.corpora,
                   "trees, families, edgeless, random, gnm, subdivision or acceptance; repeatable");
    ve->add_option("--input", verify.inputs, "extra graph files");
    ve->add_option("--dir", verify.dir, "directory of graph files");
    ve->add_option("--n", verify.n, "order or range a..b");
    ve->add_option("--m", verify.m, "edge count or range a..b for random corpora");
    ve->add_option("--count", verify.count, "number of random graphs");
    ve->add_option("--p", verify.p, "comma-separated p values");
    ve->add_option("--seed", verify.seed, "seed for random corpora");
    ve->add_option("--jobs", verify.jobs, "worker threads, 0 for all cores");
    add_common(ve, common);

    auto* tr = app.add_subcommand("trees", "enumerate trees, verify radius extremes, run bridge shifts");
    tr->add_option("--n", trees.n, "order or range a..b");
    auto* md = tr->add_option("--max-degree", trees.max_degree, "drop trees with a larger degree");
    tr->add_flag("--verify", trees.verify, "check path/star extremes for each p");
    tr->add_option("--shift", trees.shift, "run bridge shifts on this many random trees per order");
    tr->add_option("--archive", trees.archive, "write one edge-list file per tree into this directory");
    tr->add_option("--p", trees.p, "comma-separated p values");
    tr->add_option("--seed", trees.seed, "first seed for --shift");
    add_common(tr, common);

    auto* rg = app.add_subcommand("regress", "least-squares fit between two dataset columns");
    rg->add_option("--data", regress.data, "CSV dataset");
    rg->add_option("--table", regress.table, "bundled table: benzenoids or octanes");
    rg->add_option("--x", regress.x, "predictor column")->required();
    rg->add_option("--y", regress.y, "response column")->required();
    rg->add_option("--scatter", regress.scatter, "write the x,y pairs to this CSV");
    add_common(rg, common);

    auto* rp = app.add_subcommand("reproduce", "octane structure crosscheck and the published fits");
    rp->add_option("--data-dir", reproduce.data_dir, "directory holding the table CSV files");
    rp->add_option("--match-tol", reproduce.match_tol, "absolute tolerance for octane matching");
    add_common(rp, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    trees.has_max_degree = md->count() > 0;

    try {
        const Format format = parse_format(common.format).value_or(Format::json);
        BoundOptions bounds;
        std::optional<double> tol = common.tol ? common.tol : tolerance_from_env();
        if (tol) {
            if (!std::isfinite(*tol)) throw UsageError("tolerance must be finite");
            bounds.holds_tol = *tol;
            bounds.equality_tol = *tol;
        }

        Emitted result;
        if (*sp) result = run_spectrum(spectrum, format);
        else if (*ve) result = run_verify(verify, format, bounds);
        else if (*tr) result = run_trees(trees, format);
        else if (*rg) result = run_regress(regress, format);
        else result = run_reproduce(reproduce, format);

        out << result.text;
        out.flush();
        if (!common.out_path.empty()) {
            std::ofstream f(common.out_path, std::ios::binary);
            f << result.text;
            if (!f) {
                err << "error: cannot write " << common.out_path << '\n';
                return kExitUsage;
            }
        }
        return result.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace psombor::cli
