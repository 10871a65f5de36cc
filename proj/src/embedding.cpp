#include "icl/embedding.hpp"

#include <algorithm>
#include <sstream>

namespace icl {

PlaneEmbedding::PlaneEmbedding(Graph host, std::vector<std::vector<int>> rotation)
    : host_(std::move(host)), rotation_(std::move(rotation)) {
    if (static_cast<int>(rotation_.size()) != host_.vertex_count())
        throw std::invalid_argument("embedding: rotation size mismatch");
    for (int v = 0; v < host_.vertex_count(); ++v) {
        auto sorted = rotation_[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != host_.neighbors(v))
            throw std::invalid_argument("embedding: rotation of vertex " + std::to_string(v) +
                                        " is not a permutation of its adjacency set");
    }
    trace_faces();
}

int PlaneEmbedding::next_in_rotation(int v, int from) const {
    const auto& rot = rotation_.at(v);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == from) return rot[(i + 1) % rot.size()];
    throw std::invalid_argument("embedding: edge not in rotation");
}

int PlaneEmbedding::face_of(int u, int v) const {
    const auto& rot = rotation_.at(u);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == v) return face_of_[u][i];
    throw std::invalid_argument("embedding: no such directed edge");
}

void PlaneEmbedding::trace_faces() {
    const int n = host_.vertex_count();
    faces_.clear();
    face_of_.assign(n, {});
    std::vector<std::vector<int>> pos(n);  // neighbor -> rotation index
    for (int v = 0; v < n; ++v) {
        face_of_[v].assign(rotation_[v].size(), -1);
    }
    auto rot_index = [&](int v, int to) {
        const auto& rot = rotation_[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i)
            if (rot[i] == to) return i;
        return -1;
    };
    for (int u = 0; u < n; ++u) {
        for (int i0 = 0; i0 < static_cast<int>(rotation_[u].size()); ++i0) {
            if (face_of_[u][i0] != -1) continue;
            const int id = static_cast<int>(faces_.size());
            Face face;
            int x = u;
            int ix = i0;
            // Next directed edge after x->y leaves y toward the successor of
            // x in y's rotation.
            while (face_of_[x][ix] == -1) {
                face_of_[x][ix] = id;
                face.walk.push_back(x);
                int y = rotation_[x][ix];
                int iy = rot_index(y, x);
                ix = (iy + 1) % static_cast<int>(rotation_[y].size());
                x = y;
            }
            faces_.push_back(std::move(face));
        }
    }
    long long walk_total = 0;
    for (const auto& f : faces_) walk_total += f.degree();
    if (walk_total != 2LL * host_.edge_count())
        throw std::invalid_argument("embedding: face walks do not cover each directed edge once");
    // Euler per component: a rotation system is planar iff V - E + F = 2 on
    // every component (walks never leave a component; isolated vertices
    // trace no face).
    auto comps = host_.components();
    std::vector<int> comp_of(n, -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<long long> cv(comps.size(), 0), ce(comps.size(), 0), cf(comps.size(), 0);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) cv[c] = static_cast<long long>(comps[c].size());
    for (auto [u, v] : host_.edges()) ce[comp_of[u]]++, (void)v;
    for (const auto& f : faces_) cf[comp_of[f.walk.front()]]++;
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (ce[c] >= 1 && cv[c] - ce[c] + cf[c] != 2)
            throw std::invalid_argument("embedding: Euler identity violated (not a plane rotation)");
}

std::pair<PlaneEmbedding, std::vector<int>> PlaneEmbedding::without(
    const std::vector<int>& drop) const {
    auto [sub, old_of] = host_.without(drop);
    std::vector<int> new_of(host_.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i) new_of[old_of[i]] = i;
    std::vector<std::vector<int>> rot(sub.vertex_count());
    for (int i = 0; i < sub.vertex_count(); ++i)
        for (int y : rotation_[old_of[i]])
            if (new_of[y] != -1) rot[i].push_back(new_of[y]);
    return {PlaneEmbedding(std::move(sub), std::move(rot)), old_of};
}

PlaneEmbedding PlaneEmbedding::subdivide_edges(const std::vector<int>& counts) const {
    auto es = host_.edges();
    if (counts.size() != es.size())
        throw std::invalid_argument("subdivide_edges: counts size mismatch");
    int total = host_.vertex_count();
    std::vector<int> first_interior(es.size(), -1);
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (counts[i] < 0) throw std::invalid_argument("subdivide_edges: negative count");
        first_interior[i] = total;
        total += counts[i];
    }
    auto edge_index = [&](int u, int v) {
        auto key = std::minmax(u, v);
        auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(key.first, key.second));
        return static_cast<int>(it - es.begin());
    };
    Graph g(total);
    std::vector<std::vector<int>> rot(total);
    // Interior vertex adjacent to endpoint u of edge i (the path enters the
    // interior run from u's side in ascending order).
    auto port = [&](int i, int u) {
        if (counts[i] == 0) return u == es[i].first ? es[i].second : es[i].first;
        return u == es[i].first ? first_interior[i] : first_interior[i] + counts[i] - 1;
    };
    for (int v = 0; v < host_.vertex_count(); ++v)
        for (int y : rotation_[v]) rot[v].push_back(port(edge_index(v, y), v));
    for (std::size_t i = 0; i < es.size(); ++i) {
        int prev = es[i].first;
        for (int k = 0; k < counts[i]; ++k) {
            int cur = first_interior[i] + k;
            g.add_edge(prev, cur);
            rot[cur].push_back(prev);
            prev = cur;
        }
        g.add_edge(prev, es[i].second);
        if (counts[i] > 0) rot[prev].push_back(es[i].second);
    }
    // Interior rotations were filled as [prev] then need [prev, next]; the
    // middle vertices got prev only, fix by appending the next neighbor.
    for (std::size_t i = 0; i < es.size(); ++i)
        for (int k = 0; k + 1 < counts[i]; ++k) {
            int cur = first_interior[i] + k;
            rot[cur].push_back(cur + 1);
        }
    return PlaneEmbedding(std::move(g), std::move(rot));
}

PlaneEmbedding parse_embedding(const Graph& host, const std::string& text) {
    std::vector<std::vector<int>> rot(host.vertex_count());
    std::istringstream in(text);
    std::string line;
    int v = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (v >= host.vertex_count()) {
            if (line.find_first_not_of(" \t") != std::string::npos)
                throw ParseError("rotation system: extra line beyond vertex count");
            continue;
        }
        std::istringstream ls(line);
        int x = 0;
        while (ls >> x) rot[v].push_back(x);
        ++v;
    }
    if (v < host.vertex_count()) throw ParseError("rotation system: too few lines");
    try {
        return PlaneEmbedding(host, std::move(rot));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

std::string format_embedding(const PlaneEmbedding& emb) {
    std::ostringstream out;
    for (const auto& rot : emb.rotation()) {
        for (std::size_t i = 0; i < rot.size(); ++i) out << (i ? " " : "") << rot[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace icl
