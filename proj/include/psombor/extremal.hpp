#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psombor/graph.hpp"

namespace psombor {

constexpr std::size_t kMinTreeOrder = 2;
constexpr std::size_t kMaxTreeOrder = 12;
// Orders up to this one are enumerated from Prüfer sequences.
constexpr std::size_t kPruferLimit = 9;

struct TreeCatalog {
    std::size_t n = 0;
    std::optional<std::size_t> max_degree;
    std::vector<Graph> trees;          // canonically labelled
    std::vector<std::string> canonical_keys;

    std::size_t size() const { return trees.size(); }
};

bool is_tree(const Graph& g);

// AHU code of the tree rooted at its center, packed two bits per vertex.
// For bicentral trees the smaller of the two center-rooted codes is used.
std::uint64_t tree_code(const Graph& tree);
// The same code as a parenthesis string, e.g. "(()())" for P_3.
std::string tree_canonical_key(const Graph& tree);
// Relabels the tree in preorder from its canonical root, children in code order.
// Isomorphic trees map to identical graphs.
Graph canonical_tree(const Graph& tree);

// Unlabelled trees on n vertices (kMinTreeOrder..kMaxTreeOrder), sorted by code,
// optionally dropping trees with a vertex of degree > max_degree.
TreeCatalog enumerate_trees(std::size_t n, std::optional<std::size_t> max_degree = std::nullopt);
// Prüfer sequences deduplicated by code; n <= kPruferLimit.
std::vector<Graph> trees_by_prufer(std::size_t n);
// Grows every tree on k vertices by one leaf in all positions and deduplicates.
std::vector<Graph> trees_by_leaf_extension(std::size_t n);

struct TreeExtremes {
    std::size_t n = 0;
    double p = 0.0;
    bool hard = true;  // false for p < 1
    std::size_t tree_count = 0;
    double path_radius = 0.0;
    double star_radius = 0.0;
    double min_radius = 0.0;
    double max_radius = 0.0;
    std::size_t min_attained = 0;  // trees within tolerance of the minimum
    std::size_t max_attained = 0;
    bool min_is_path = false;
    bool max_is_star = false;

    bool ok() const { return min_is_path && max_is_star && min_attained == 1 && max_attained == 1; }
};

// Spectral radius of S_p over all trees on n vertices; path minimal and star
// maximal, each uniquely.
TreeExtremes verify_tree_extremes(std::size_t n, double p);

struct ShiftOutcome {
    Edge edge;          // oriented so that x_u >= x_v
    bool swapped = false;
    double x_u = 0.0;
    double x_v = 0.0;
    double radius_after = 0.0;
    bool increased = false;
    Graph result;
};

struct ShiftReport {
    double p = 0.0;
    bool applicable = true;
    bool hard = true;  // false for p < 1
    std::string reason;
    double radius = 0.0;
    bool perron_positive = false;
    std::vector<ShiftOutcome> shifts;

    bool ok() const;
};

// Applies the bridge shift to every non-pendant cut edge of a connected graph
// and compares spectral radii. Increases must exceed 1e-10 * radius.
ShiftReport shift_experiment(const Graph& g, double p);

struct ShiftChain {
    std::vector<double> radii;  // one per graph visited, starting with g
    Graph final_graph;
    bool monotone = true;
};

// Repeatedly shifts the first eligible edge until none is left.
ShiftChain shift_until_stable(const Graph& g, double p);

}  // namespace psombor
