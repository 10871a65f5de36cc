#ifndef ICL_GRAPH_HPP
#define ICL_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icl {

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    int min_degree() const;

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> component_of(int v) const;
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    // Induced subgraph on `keep` (ascending vertex list); second element maps
    // new ids back to ids in this graph.
    std::pair<Graph, std::vector<int>> induced(const std::vector<int>& keep) const;

    // Copy with `drop` removed; mapping as in induced().
    std::pair<Graph, std::vector<int>> without(const std::vector<int>& drop) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw std::out_of_range("Graph: vertex out of range");
    }
    std::vector<std::vector<int>> adj_;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list format: first line "n m", then m lines "u v".  Rejects loops,
// duplicate edges, out-of-range ids, and malformed lines.  LF or CRLF.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Treats a forest as satisfying every bound.
bool girth_at_least(const Graph& g, int bound);

}  // namespace icl

#endif
