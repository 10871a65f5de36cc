#ifndef ICL_THREADS_DECOMP_HPP
#define ICL_THREADS_DECOMP_HPP

#include "icl/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace icl {

// A thread: path whose interior vertices all have degree 2 and whose
// endpoints have degree >= 3.  0-threads (plain edges between 3+-vertices)
// count.  u == v marks a cycle of 2-vertices attached at a single
// 3+-vertex; its interior vertices are nearby u once per endpoint slot.
struct Thread {
    int u = -1;
    int v = -1;
    std::vector<int> interior;  // ordered from u's side toward v's side
    bool loop() const { return u == v; }
    int length() const { return static_cast<int>(interior.size()); }
};

struct NonThreadComponent {
    enum Kind { AllTwoCycle, PendantChain };
    Kind kind;
    std::vector<int> vertices;  // cycle order, or chain order including the low-degree end(s)
};

struct ThreadDecomposition {
    std::vector<Thread> threads;
    std::vector<NonThreadComponent> non_threads;
    std::vector<std::pair<int, int>> pseudo_adjacent;  // distinct endpoint pairs, u < v
    // Per vertex: nearby 2-vertices, one entry per (thread, endpoint slot)
    // incidence, sorted; loops list their interior twice.
    std::vector<std::vector<int>> nearby;
    // Per vertex: (thread id, slot) incidences; slot 0 = u end, 1 = v end.
    std::vector<std::vector<std::pair<int, int>>> incidences;

    int two_vertex_coverage(const Graph& g) const;  // interiors + non-thread 2-vertices
};

ThreadDecomposition thread_decomposition(const Graph& g);

// Subgraph spanned by the edges with one endpoint of degree 2 and the other
// of degree 3 (degrees in g).  Same vertex set; `isolated` flags vertices
// incident to no such edge.
struct G23 {
    Graph graph;
    std::vector<int> isolated;
};
G23 build_g23(const Graph& g);

// Auxiliary graph H on the 3-vertices of a subcubic graph: ends of a
// 3-thread are joined; ends u, v of a 2-thread are joined when one of the
// other threads at u is a 3-thread and the third is a 2- or 3-thread.  The
// rule names one endpoint; EitherEndpoint fires it from each side,
// BothEndpoints requires both sides to qualify.
enum class HRule { EitherEndpoint, BothEndpoints };

struct AuxiliaryGraph {
    std::vector<int> three_vertices;            // H's vertex set (ids in g)
    std::vector<std::pair<int, int>> edges;     // simple collapsed edges, u < v
    std::vector<int> multiplicity;              // parallel-thread count per edge
    std::vector<std::pair<int, int>> loops;     // (vertex, multiplicity) from qualifying loop threads
    std::array<long long, 10> a_counts{};       // a_i: 3-vertices with i nearby 2-vertices
    std::array<long long, 10> a_hat_counts{};   // restricted to non-isolated H vertices
    long long n_h = 0;
    long long n_hat = 0;
    std::vector<int> nearby_count;              // i(v), indexed by g vertex id (-1 for non-3-vertices)
    std::vector<int> h_degree;                  // multigraph degree in H (loops count twice), by g id

    bool in_h_hat(int v) const { return h_degree[v] > 0; }
};

AuxiliaryGraph build_auxiliary_h(const Graph& g, HRule rule = HRule::EitherEndpoint);

}  // namespace icl

#endif
