#ifndef ICL_TESTS_SUPPORT_HPP
#define ICL_TESTS_SUPPORT_HPP

#include "icl/graph.hpp"
#include "icl/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace icl::testing {

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);        // outer C5
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);              // spokes
    return g;
}

inline Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) out.add_edge(i, j);
    return out;
}

inline Graph cube_q3() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

// Octahedron = K_{2,2,2} with parts {0,3}, {1,4}, {2,5}; 4-regular, planar.
inline Graph octahedron() {
    Graph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (i % 3 != j % 3) g.add_edge(i, j);
    return g;
}

// Uniform k-fold subdivision without an embedding.
inline Graph subdivide_plain(const Graph& g, int k) {
    auto es = g.edges();
    Graph out(g.vertex_count() + k * static_cast<int>(es.size()));
    int next = g.vertex_count();
    for (auto [u, v] : es) {
        int prev = u;
        for (int i = 0; i < k; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

// Brute force k-colorability (proper) for tiny graphs.
inline bool k_colorable_bruteforce(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && color[u] != color[v];
        if (ok) return true;
        int i = 0;
        while (i < n && ++color[i] == k) color[i++] = 0;
        if (i == n) return false;
    }
}

// All cycles by DFS edge-walks: shortest cycle length, or -1 for forests.
// Independent of the BFS girth implementation.
inline int girth_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> stack;
    std::vector<char> on_stack(n, 0);
    auto dfs = [&](auto&& self, int v, int parent_edge_to) -> void {
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : g.neighbors(v)) {
            if (w == parent_edge_to) continue;
            if (on_stack[w]) {
                int len = 0;
                for (int i = static_cast<int>(stack.size()) - 1; stack[i] != w; --i) ++len;
                ++len;
                if (len >= 3 && (best == -1 || len < best)) best = len;
            } else {
                self(self, w, v);
            }
        }
        stack.pop_back();
        on_stack[v] = 0;
    };
    for (int s = 0; s < n; ++s) dfs(dfs, s, -1);
    return best;
}

// Non-isomorphic graphs with up to max_n vertices, via extension with
// canonical dedup (min adjacency bitmask over all permutations).
std::vector<Graph> small_graph_library(int max_n, bool connected_only);

// Canonical form used by the library (exposed for determinism tests).
std::uint64_t canonical_code(const Graph& g);

}  // namespace icl::testing

#endif
