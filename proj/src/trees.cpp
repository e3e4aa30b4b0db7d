#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "psombor/extremal.hpp"
#include "psombor/spectral.hpp"

namespace psombor {

namespace {

constexpr unsigned kMaxCodeOrder = 31;
constexpr std::uint8_t kNone = 0xff;

struct Code {
    std::uint64_t bits = 0;
    unsigned len = 0;
};

bool code_less(const Code& a, const Code& b) { return a.len != b.len ? a.len < b.len : a.bits < b.bits; }

// Fixed-size adjacency so the Prüfer loop never allocates.
struct SmallTree {
    unsigned n = 0;
    std::array<std::uint8_t, 32> deg{};
    std::array<std::array<std::uint8_t, 32>, 32> nb{};

    void add_edge(unsigned u, unsigned v) {
        nb[u][deg[u]++] = static_cast<std::uint8_t>(v);
        nb[v][deg[v]++] = static_cast<std::uint8_t>(u);
    }
};

SmallTree small_from_graph(const Graph& g) {
    if (g.order() > kMaxCodeOrder) throw std::invalid_argument("tree too large for a packed code");
    SmallTree t;
    t.n = static_cast<unsigned>(g.order());
    for (const Edge& e : g.edges()) t.add_edge(e.u, e.v);
    return t;
}

Code encode(const SmallTree& t, unsigned v, unsigned parent) {
    std::array<Code, 32> kids;
    unsigned k = 0;
    for (unsigned i = 0; i < t.deg[v]; ++i) {
        const unsigned u = t.nb[v][i];
        if (u != parent) kids[k++] = encode(t, u, v);
    }
    std::sort(kids.begin(), kids.begin() + k, code_less);
    Code c{1, 1};
    for (unsigned i = 0; i < k; ++i) {
        c.bits = (c.bits << kids[i].len) | kids[i].bits;
        c.len += kids[i].len;
    }
    c.bits <<= 1;
    c.len += 1;
    return c;
}

// One or two centers by repeated leaf stripping.
std::pair<unsigned, unsigned> centers(const SmallTree& t) {
    if (t.n <= 2) return {0, t.n == 2 ? 1u : 0u};
    std::array<unsigned, 32> deg{};
    std::array<unsigned, 32> layer{};
    unsigned count = 0;
    for (unsigned v = 0; v < t.n; ++v) {
        deg[v] = t.deg[v];
        if (deg[v] <= 1) layer[count++] = v;
    }
    unsigned remaining = t.n;
    while (remaining > 2) {
        remaining -= count;
        std::array<unsigned, 32> next{};
        unsigned next_count = 0;
        for (unsigned i = 0; i < count; ++i) {
            const unsigned v = layer[i];
            for (unsigned j = 0; j < t.deg[v]; ++j) {
                const unsigned u = t.nb[v][j];
                if (--deg[u] == 1) next[next_count++] = u;
            }
        }
        layer = next;
        count = next_count;
    }
    return {layer[0], count == 2 ? layer[1] : layer[0]};
}

// Root with the smaller code; returns the code too.
std::pair<unsigned, Code> canonical_root(const SmallTree& t) {
    const auto [a, b] = centers(t);
    const Code ca = encode(t, a, kNone);
    if (a == b) return {a, ca};
    const Code cb = encode(t, b, kNone);
    return code_less(cb, ca) ? std::pair{b, cb} : std::pair{a, ca};
}

std::uint64_t small_code(const SmallTree& t) { return canonical_root(t).second.bits; }

void preorder(const SmallTree& t, unsigned v, unsigned parent, std::vector<Vertex>& label, Vertex& next,
              std::vector<Edge>& edges) {
    label[v] = next++;
    if (parent != kNone) edges.push_back({label[parent], label[v]});
    std::vector<std::pair<Code, unsigned>> kids;
    for (unsigned i = 0; i < t.deg[v]; ++i) {
        const unsigned u = t.nb[v][i];
        if (u != parent) kids.push_back({encode(t, u, v), u});
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto& x, const auto& y) { return code_less(x.first, y.first); });
    for (const auto& [code, u] : kids) preorder(t, u, v, label, next, edges);
}

Graph canonical_from_small(const SmallTree& t) {
    const unsigned root = canonical_root(t).first;
    std::vector<Vertex> label(t.n, 0);
    std::vector<Edge> edges;
    Vertex next = 0;
    preorder(t, root, kNone, label, next, edges);
    return Graph::from_edges(t.n, edges);
}

void check_order(std::size_t n) {
    if (n < kMinTreeOrder || n > kMaxTreeOrder) {
        throw std::invalid_argument("tree order must be in " + std::to_string(kMinTreeOrder) + ".." +
                                    std::to_string(kMaxTreeOrder));
    }
}

std::vector<Graph> sorted_by_code(std::map<std::uint64_t, Graph>& classes) {
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

std::uint64_t tree_code(const Graph& tree) {
    if (!is_tree(tree)) throw GraphError("tree_code: graph is not a tree");
    return small_code(small_from_graph(tree));
}

std::string tree_canonical_key(const Graph& tree) {
    const std::uint64_t bits = tree_code(tree);
    const unsigned len = 2 * static_cast<unsigned>(tree.order());
    std::string s;
    s.reserve(len);
    for (unsigned i = len; i-- > 0;) s.push_back(((bits >> i) & 1u) ? '(' : ')');
    return s;
}

Graph canonical_tree(const Graph& tree) {
    if (!is_tree(tree)) throw GraphError("canonical_tree: graph is not a tree");
    return canonical_from_small(small_from_graph(tree));
}

std::vector<Graph> trees_by_prufer(std::size_t n) {
    check_order(n);
    if (n > kPruferLimit) throw std::invalid_argument("Prüfer enumeration limited to n <= 9");
    const unsigned nn = static_cast<unsigned>(n);
    const unsigned len = nn - 2;

    std::unordered_map<std::uint64_t, SmallTree> classes;
    std::array<unsigned, 32> seq{};
    while (true) {
        // Linear-time decode.
        std::array<unsigned, 32> degree{};
        for (unsigned v = 0; v < nn; ++v) degree[v] = 1;
        for (unsigned i = 0; i < len; ++i) ++degree[seq[i]];
        SmallTree t;
        t.n = nn;
        unsigned ptr = 0;
        while (degree[ptr] != 1) ++ptr;
        unsigned leaf = ptr;
        for (unsigned i = 0; i < len; ++i) {
            const unsigned a = seq[i];
            t.add_edge(leaf, a);
            if (--degree[a] == 1 && a < ptr) {
                leaf = a;
            } else {
                ++ptr;
                while (degree[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        t.add_edge(leaf, nn - 1);
        classes.try_emplace(small_code(t), t);

        // Odometer over [0, n)^(n-2).
        unsigned i = 0;
        while (i < len && ++seq[i] == nn) seq[i++] = 0;
        if (i == len) break;
    }

    std::map<std::uint64_t, Graph> ordered;
    for (const auto& [code, t] : classes) ordered.emplace(code, canonical_from_small(t));
    return sorted_by_code(ordered);
}

std::vector<Graph> trees_by_leaf_extension(std::size_t n) {
    check_order(n);
    std::vector<SmallTree> level(1);
    level[0].n = 1;
    for (unsigned k = 1; k < n; ++k) {
        std::map<std::uint64_t, SmallTree> next;
        for (const SmallTree& t : level) {
            for (unsigned v = 0; v < k; ++v) {
                SmallTree grown = t;
                grown.n = k + 1;
                grown.add_edge(v, k);
                next.try_emplace(small_code(grown), grown);
            }
        }
        level.clear();
        for (auto& [code, t] : next) level.push_back(t);
    }
    std::map<std::uint64_t, Graph> ordered;
    for (const SmallTree& t : level) ordered.emplace(small_code(t), canonical_from_small(t));
    return sorted_by_code(ordered);
}

TreeCatalog enumerate_trees(std::size_t n, std::optional<std::size_t> max_degree) {
    check_order(n);
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<Graph>> cache;
    std::vector<Graph> all;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it == cache.end()) {
            it = cache.emplace(n, n <= kPruferLimit ? trees_by_prufer(n) : trees_by_leaf_extension(n)).first;
        }
        all = it->second;
    }

    TreeCatalog cat;
    cat.n = n;
    cat.max_degree = max_degree;
    for (Graph& t : all) {
        if (max_degree && t.max_degree() > *max_degree) continue;
        cat.canonical_keys.push_back(tree_canonical_key(t));
        cat.trees.push_back(std::move(t));
    }
    return cat;
}

TreeExtremes verify_tree_extremes(std::size_t n, double p) {
    const TreeCatalog cat = enumerate_trees(n);
    TreeExtremes r;
    r.n = n;
    r.p = p;
    r.hard = p >= 1.0;
    r.tree_count = cat.size();

    const std::uint64_t path_code = tree_code(path_graph(n));
    const std::uint64_t star_code = tree_code(star_graph(n));
    std::vector<double> radius(cat.size());
    std::size_t arg_min = 0, arg_max = 0;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        radius[i] = sombor_spectrum(cat.trees[i], p).largest();
        if (radius[i] < radius[arg_min]) arg_min = i;
        if (radius[i] > radius[arg_max]) arg_max = i;
        const std::uint64_t code = tree_code(cat.trees[i]);
        if (code == path_code) r.path_radius = radius[i];
        if (code == star_code) r.star_radius = radius[i];
    }
    r.min_radius = radius[arg_min];
    r.max_radius = radius[arg_max];
    const double tol_min = 1e-10 * std::max(1.0, std::abs(r.min_radius));
    const double tol_max = 1e-10 * std::max(1.0, std::abs(r.max_radius));
    for (double x : radius) {
        if (std::abs(x - r.min_radius) <= tol_min) ++r.min_attained;
        if (std::abs(x - r.max_radius) <= tol_max) ++r.max_attained;
    }
    r.min_is_path = tree_code(cat.trees[arg_min]) == path_code;
    r.max_is_star = tree_code(cat.trees[arg_max]) == star_code;
    return r;
}

}  // namespace psombor
