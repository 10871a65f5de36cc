#ifndef ICL_LIST_COLORING_HPP
#define ICL_LIST_COLORING_HPP

#include "icl/exact.hpp"
#include "icl/graph.hpp"

#include <optional>
#include <vector>

namespace icl {

struct BlockDecomposition {
    struct Block {
        std::vector<int> vertices;                // sorted
        std::vector<std::pair<int, int>> edges;   // u < v, sorted
        bool is_clique() const {
            const long long k = static_cast<long long>(vertices.size());
            return static_cast<long long>(edges.size()) == k * (k - 1) / 2;
        }
        bool is_odd_cycle() const {
            return vertices.size() >= 3 && vertices.size() == edges.size() &&
                   vertices.size() % 2 == 1 && cycle_shaped();
        }
        bool cycle_shaped() const;
    };
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;                       // sorted
    std::vector<std::vector<int>> blocks_of_cut_vertex;  // parallel to cut_vertices
};

// Standard biconnected decomposition (every edge in exactly one block;
// bridges are 2-vertex blocks).
BlockDecomposition blocks(const Graph& g);

struct DegreeChoosableResult {
    bool degree_choosable = false;
    std::optional<int> witness_block;  // a block that is neither clique nor odd cycle
};

// False iff every block is a complete graph or an odd cycle (Gallai tree).
DegreeChoosableResult is_degree_choosable(const Graph& g);

struct ConstructiveColoring {
    Coloring coloring;
    bool used_fallback = false;          // a step deferred to the exact oracle
    bool ok = true;                      // false only if even the oracle failed
    std::string note;
    // Per vertex: number of distinct colors already on neighbors when the
    // vertex was colored (-1 when untouched by the greedy pass).
    std::vector<int> inspected_forbidden;
};

// Degree lists with a surplus vertex y: greedy in decreasing BFS distance
// from y, lowest-id ties.  Requires g connected, |lists[v]| >= d(v) for all
// v, |lists[y]| > d(y).
ConstructiveColoring color_theorem_a_surplus(const Graph& g,
                                             const std::vector<std::vector<int>>& lists, int y);

// 2-connected, degree lists, not all lists identical: color one endpoint of
// a list-differing edge with a color missing from the other side, then run
// the surplus case on the rest.
ConstructiveColoring color_theorem_a_nonuniform(const Graph& g,
                                                const std::vector<std::vector<int>>& lists);

// Degree lists on a connected, degree-choosable graph.  Constructive for the
// structured cases (surplus vertex, non-identical lists on 2-connected
// graphs, even cycles, the two-neighbor merge); everything else defers to
// the exact oracle and sets used_fallback.
ConstructiveColoring color_degree_lists(const Graph& g,
                                        const std::vector<std::vector<int>>& lists);

}  // namespace icl

#endif
