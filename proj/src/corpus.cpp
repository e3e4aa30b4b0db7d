#include <algorithm>
#include <filesystem>
#include <sstream>

#include "psombor/bounds.hpp"
#include "psombor/extremal.hpp"

namespace psombor {

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::vector<NamedGraph> tree_corpus(std::size_t n_lo, std::size_t n_hi) {
    std::vector<NamedGraph> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const TreeCatalog cat = enumerate_trees(n);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            out.push_back({"tree" + std::to_string(n) + "-" + std::to_string(i), cat.trees[i]});
        }
    }
    return out;
}

std::vector<NamedGraph> family_corpus(std::size_t n_max) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 2; n <= n_max; ++n) {
        out.push_back({"K" + std::to_string(n), complete_graph(n)});
        out.push_back({"P" + std::to_string(n), path_graph(n)});
        if (n >= 3) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
        for (std::size_t a = 1; 2 * a <= n; ++a) {
            const std::size_t b = n - a;
            out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite_graph(a, b)});
        }
    }
    return out;
}

std::vector<NamedGraph> edgeless_corpus(std::size_t n_lo, std::size_t n_hi) {
    std::vector<NamedGraph> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) out.push_back({std::to_string(n) + "K1", empty_graph(n)});
    return out;
}

std::vector<NamedGraph> random_connected_corpus(std::size_t n, std::size_t m_lo, std::size_t m_hi,
                                                std::size_t count, std::uint64_t seed) {
    if (m_lo > m_hi) throw std::invalid_argument("random_connected_corpus: empty edge range");
    if (m_hi + 1 < n) throw std::invalid_argument("random_connected_corpus: too few edges to connect");
    SeededRng rng(seed);
    std::vector<NamedGraph> out;
    std::size_t draws = 0;
    while (out.size() < count) {
        const std::size_t m = m_lo + static_cast<std::size_t>(rng.below(m_hi - m_lo + 1));
        const std::uint64_t s = rng.next();
        ++draws;
        Graph g = random_gnm(n, m, s);
        if (!is_connected(g)) continue;
        out.push_back({"gnm" + std::to_string(n) + "-" + std::to_string(m) + "-d" + std::to_string(draws),
                       std::move(g)});
    }
    return out;
}

std::vector<NamedGraph> random_gnm_corpus(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed) {
    std::vector<NamedGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({"gnm" + std::to_string(n) + "-" + std::to_string(m) + "-s" + std::to_string(seed + i),
                       random_gnm(n, m, seed + i)});
    }
    return out;
}

std::vector<NamedGraph> subdivision_corpus(std::size_t n_max) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 3; n <= n_max; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    out.push_back({"K4", complete_graph(4)});
    return out;
}

CorpusLoad directory_corpus(const std::string& path) {
    namespace fs = std::filesystem;
    CorpusLoad load;
    std::error_code ec;
    fs::directory_iterator it(path, ec);
    if (ec) {
        load.errors.push_back(path + ": " + ec.message());
        return load;
    }
    std::vector<fs::path> files;
    for (const auto& entry : it)
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        try {
            load.graphs.push_back({f.filename().string(), read_graph_file(f.string())});
        } catch (const std::exception& e) {
            load.errors.push_back(f.filename().string() + ": " + e.what());
        }
    }
    return load;
}

}  // namespace psombor
