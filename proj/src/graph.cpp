#include "icl/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace icl {

int Graph::edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += static_cast<int>(row.size());
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = degree(0);
    for (const auto& row : adj_) d = std::min(d, static_cast<int>(row.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::component_of(int v) const {
    check_vertex(v);
    std::vector<char> seen(vertex_count(), 0);
    std::deque<int> queue{v};
    seen[v] = 1;
    std::vector<int> comp;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        comp.push_back(x);
        for (int y : adj_[x])
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (seen[v]) continue;
        auto comp = component_of(v);
        for (int x : comp) seen[x] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const {
    if (vertex_count() == 0) return true;
    return static_cast<int>(component_of(0).size()) == vertex_count();
}

std::pair<Graph, std::vector<int>> Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> old_of = keep;
    std::sort(old_of.begin(), old_of.end());
    old_of.erase(std::unique(old_of.begin(), old_of.end()), old_of.end());
    std::vector<int> new_of(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i) {
        check_vertex(old_of[i]);
        new_of[old_of[i]] = i;
    }
    Graph out(static_cast<int>(old_of.size()));
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i)
        for (int y : adj_[old_of[i]])
            if (new_of[y] > i) out.add_edge(i, new_of[y]);
    return {std::move(out), std::move(old_of)};
}

std::pair<Graph, std::vector<int>> Graph::without(const std::vector<int>& drop) const {
    std::vector<char> gone(vertex_count(), 0);
    for (int v : drop) {
        check_vertex(v);
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t idx = 0;
    while (idx < lines.size() && lines[idx].find_first_not_of(" \t") == std::string::npos) ++idx;
    if (idx >= lines.size()) throw ParseError("edge list: empty input");
    long long n = 0;
    long long m = 0;
    if (!parse_two_ints(lines[idx], n, m)) throw ParseError("edge list: bad header line '" + lines[idx] + "'");
    if (n < 0 || m < 0 || n > 1000000) throw ParseError("edge list: bad header counts");
    ++idx;
    Graph g(static_cast<int>(n));
    long long read = 0;
    for (; idx < lines.size(); ++idx) {
        if (lines[idx].find_first_not_of(" \t") == std::string::npos) continue;
        long long u = 0;
        long long v = 0;
        if (!parse_two_ints(lines[idx], u, v)) throw ParseError("edge list: bad edge line '" + lines[idx] + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range in '" + lines[idx] + "'");
        if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("edge list: duplicate edge '" + lines[idx] + "'");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++read;
    }
    if (read != m)
        throw ParseError("edge list: header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(read));
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; an edge closing between two visited vertices at
    // depths d(x), d(y) witnesses a cycle of length d(x)+d(y)+1 through the
    // root.  The minimum over all roots is exact.
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x)) {
                if (y == parent[x]) continue;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

bool girth_at_least(const Graph& g, int bound) {
    auto v = girth(g);
    return !v.has_value() || *v >= bound;
}

}  // namespace icl
