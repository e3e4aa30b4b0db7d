#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psombor/graph.hpp"
#include "psombor/invariants.hpp"
#include "psombor/spectral.hpp"
#include "psombor/tolerances.hpp"

namespace psombor {

// Which sides of a report are expected to be tight.
enum class Side { none, lower, upper, both };
const char* to_string(Side side);

enum class ReportStatus { pass, fail, not_applicable, observed };
const char* to_string(ReportStatus status);

// Values of p for which a check is asserted. Outside its domain a check still
// runs, but only as an observation.
enum class PDomain { all, at_least_one, never };

struct BoundOptions {
    double holds_tol = tol::bound_holds;
    double equality_tol = tol::bound_equality;
};

// One inequality evaluated on one (graph, p).
struct BoundReport {
    std::string check_id;
    std::string statement;
    double p = 0.0;
    std::string graph_id;

    double value = 0.0;
    std::optional<double> lower;
    std::optional<double> upper;

    bool applicable = true;
    bool hard = true;
    std::string reason;  // set when not applicable or observe-only

    bool holds = true;
    double slack = 0.0;  // min(value - lower, upper - value) over present sides

    Side equality_expected = Side::none;
    bool equality_observed = false;
    std::string note;

    ReportStatus status() const;
    double relative_slack() const;
};

struct ComplementComponent {
    std::vector<Vertex> vertices;
    Graph graph;
    double radius = 0.0;  // largest p-Sombor eigenvalue of the component
};

// Everything the checks need for one (graph, p), computed once.
class GraphAnalysis {
public:
    GraphAnalysis(Graph g, double p, std::string id = {});

    const Graph& graph() const { return graph_; }
    double p() const { return p_; }
    const std::string& id() const { return id_; }

    const StructureStats& stats() const { return stats_; }
    const SpectralDecomposition& sombor() const { return sombor_; }
    const SpectralDecomposition& adjacency() const { return adjacency_; }
    const SpectralDecomposition& laplacian() const { return laplacian_; }
    const MomentSet& moments() const { return moments_; }
    const IndexBundle& indices() const { return indices_; }
    const SpectralInvariants& invariants() const { return invariants_; }

    const Graph& complement_graph() const { return complement_; }
    const SpectralDecomposition& complement_sombor() const { return complement_sombor_; }
    const std::vector<ComplementComponent>& complement_components() const { return complement_components_; }

    // Energy of the subdivision graph; only computed for regular graphs with edges.
    std::optional<double> subdivision_energy() const { return subdivision_energy_; }

    bool complete() const { return complete_; }
    bool edgeless() const { return edgeless_; }

private:
    Graph graph_;
    double p_;
    std::string id_;
    StructureStats stats_;
    SpectralDecomposition sombor_;
    SpectralDecomposition adjacency_;
    SpectralDecomposition laplacian_;
    MomentSet moments_;
    IndexBundle indices_;
    SpectralInvariants invariants_;
    Graph complement_;
    SpectralDecomposition complement_sombor_;
    std::vector<ComplementComponent> complement_components_;
    std::optional<double> subdivision_energy_;
    bool complete_ = false;
    bool edgeless_ = false;
};

std::vector<BoundReport> check_moment_index_bounds(const GraphAnalysis& a, const BoundOptions& opt = {});
std::vector<BoundReport> check_laplacian_bounds(const GraphAnalysis& a, const BoundOptions& opt = {});
std::vector<BoundReport> check_radius_bounds(const GraphAnalysis& a, const BoundOptions& opt = {});
std::vector<BoundReport> check_energy_estrada_bounds(const GraphAnalysis& a, const BoundOptions& opt = {});
std::vector<BoundReport> check_nordhaus_gaddum(const GraphAnalysis& a, const BoundOptions& opt = {});
// Trace moments N_0..N_4 from the spectrum against the closed forms.
std::vector<BoundReport> check_moment_routes(const GraphAnalysis& a, const BoundOptions& opt = {});

// Every group above, in a fixed order.
std::vector<BoundReport> check_all(const GraphAnalysis& a, const BoundOptions& opt = {});
std::vector<BoundReport> check_all(const Graph& g, double p, const std::string& id = {},
                                   const BoundOptions& opt = {});

// Lower energy bounds sqrt(N2^3/N4) and N2^2/N3 are ordered by N3/sqrt(N2 N4).
enum class TighterBound { holder_n4, holder_n3, equal };
struct EnergyBoundComparison {
    double ratio = 0.0;
    TighterBound tighter = TighterBound::equal;
};
EnergyBoundComparison compare_energy_lower_bounds(const MomentSet& moments);

// ---- suite -----------------------------------------------------------------

struct NamedGraph {
    std::string id;
    Graph graph;
};

struct CheckCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;
    std::size_t observed = 0;
    std::size_t observed_violations = 0;
    std::size_t equality_expected = 0;
    std::size_t equality_confirmed = 0;
    std::optional<double> min_relative_slack;  // over hard, applicable reports

    std::size_t total() const { return passed + failed + not_applicable + observed; }
};

struct Violation {
    std::string graph_id;
    double p = 0.0;
    std::string check_id;
    std::string edge_list;
    double value = 0.0;
    std::optional<double> lower;
    std::optional<double> upper;
    double slack = 0.0;
    bool hard = true;
    bool equality_only = false;  // inequality held, but a promised equality did not
};

struct SuiteReport {
    std::string description;
    std::size_t graph_count = 0;
    std::vector<double> p_values;
    std::size_t report_count = 0;
    std::map<std::string, CheckCounts> per_check;
    std::vector<Violation> violations;    // hard failures
    std::vector<Violation> observations;  // observe-only checks that did not hold
    std::vector<std::string> load_errors;
    std::vector<std::string> evaluation_errors;  // e.g. eigensolver failures

    bool ok() const { return violations.empty() && evaluation_errors.empty(); }
};

struct SuiteOptions {
    std::string description;
    BoundOptions bounds;
    unsigned jobs = 1;
    // Keep every report (large); off by default.
    bool keep_reports = false;
};

struct SuiteResult {
    SuiteReport report;
    std::vector<BoundReport> reports;  // only filled with keep_reports
};

SuiteResult run_suite(std::span<const NamedGraph> corpus, std::span<const double> p_values,
                      const SuiteOptions& options = {});

// ---- corpora ---------------------------------------------------------------

std::vector<NamedGraph> tree_corpus(std::size_t n_lo, std::size_t n_hi);
// K_n, P_n (n >= 2), C_n (n >= 3) and K_{a,b} (a <= b, a + b <= n) up to n_max.
std::vector<NamedGraph> family_corpus(std::size_t n_max);
std::vector<NamedGraph> edgeless_corpus(std::size_t n_lo, std::size_t n_hi);
// Connected graphs drawn as G(n, m) with m uniform in [m_lo, m_hi]; rejects disconnected draws.
std::vector<NamedGraph> random_connected_corpus(std::size_t n, std::size_t m_lo, std::size_t m_hi,
                                                std::size_t count, std::uint64_t seed);
// count independent G(n, m) draws using seeds seed, seed+1, ...
std::vector<NamedGraph> random_gnm_corpus(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed);
// Regular graphs and their subdivisions are exercised through C_n and K_4.
std::vector<NamedGraph> subdivision_corpus(std::size_t n_max);

struct CorpusLoad {
    std::vector<NamedGraph> graphs;
    std::vector<std::string> errors;
};
// Every regular file in the directory, sorted by name.
CorpusLoad directory_corpus(const std::string& path);

std::string edge_list_string(const Graph& g);

}  // namespace psombor
