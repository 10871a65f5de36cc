#include "support.hpp"

#include <set>

namespace icl::testing {

namespace {

std::vector<std::uint16_t> adjacency_bits(const Graph& g) {
    std::vector<std::uint16_t> bits(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) bits[v] |= std::uint16_t(1) << w;
    return bits;
}

std::uint64_t edge_mask(const std::vector<std::uint16_t>& bits, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (bits[perm[i]] & (std::uint16_t(1) << perm[j])) mask |= std::uint64_t(1) << bit;
    return mask;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    auto bits = adjacency_bits(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, edge_mask(bits, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> small_graph_library(int max_n, bool connected_only) {
    // Level n graphs from level n-1 graphs plus one vertex with every
    // possible neighborhood; canonical codes dedupe isomorphs.
    std::vector<Graph> current;
    current.push_back(Graph(1));
    std::vector<Graph> out;
    auto keep = [&](const Graph& g) {
        if (!connected_only || g.connected()) out.push_back(g);
    };
    for (const auto& g : current) keep(g);
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto& base : current) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t(1) << (n - 1)); ++nb) {
                Graph g(n);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int b = 0; b < n - 1; ++b)
                    if (nb & (std::uint32_t(1) << b)) g.add_edge(b, n - 1);
                const std::uint64_t code = canonical_code(g);
                if (seen.insert(code).second) next.push_back(std::move(g));
            }
        }
        for (const auto& g : next) keep(g);
        current = std::move(next);
    }
    return out;
}

}  // namespace icl::testing
