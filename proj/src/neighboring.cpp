#include "icl/neighboring.hpp"

#include <algorithm>
#include <vector>

namespace icl {

namespace {

// Row u of G^(2): union of N(w) over w in N(u), minus u itself.
std::vector<int> row_of(const Graph& g, int u, std::vector<char>& mark) {
    std::vector<int> row;
    for (int w : g.neighbors(u)) {
        for (int x : g.neighbors(w)) {
            if (x == u || mark[x]) continue;
            mark[x] = 1;
            row.push_back(x);
        }
    }
    for (int x : row) mark[x] = 0;
    std::sort(row.begin(), row.end());
    return row;
}

Graph assemble(const Graph& g, const std::vector<std::vector<int>>& rows) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : rows[u])
            if (u < v) out.add_edge(u, v);
    return out;
}

}  // namespace

Graph neighboring_graph_serial(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rows(n);
    std::vector<char> mark(n, 0);
    for (int u = 0; u < n; ++u) rows[u] = row_of(g, u, mark);
    return assemble(g, rows);
}

Graph neighboring_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rows(n);
#pragma omp parallel
    {
        std::vector<char> mark(n, 0);
#pragma omp for schedule(dynamic, 64)
        for (int u = 0; u < n; ++u) rows[u] = row_of(g, u, mark);
    }
    return assemble(g, rows);
}

}  // namespace icl
