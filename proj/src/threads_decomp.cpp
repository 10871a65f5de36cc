#include "icl/threads_decomp.hpp"

#include <algorithm>

namespace icl {

int ThreadDecomposition::two_vertex_coverage(const Graph& g) const {
    int total = 0;
    for (const auto& t : threads) total += t.length();
    for (const auto& c : non_threads)
        for (int v : c.vertices)
            if (g.degree(v) == 2) ++total;
    return total;
}

namespace {

// Follow a run of 2-vertices starting from `start` away from `prev`;
// returns the run and the terminating vertex (first non-2-vertex met), or
// terminator == start when the run closes a cycle of 2-vertices.
std::pair<std::vector<int>, int> walk_run(const Graph& g, int prev, int start) {
    std::vector<int> run;
    int p = prev;
    int cur = start;
    while (g.degree(cur) == 2) {
        run.push_back(cur);
        int nxt = g.neighbors(cur)[0] == p ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        p = cur;
        cur = nxt;
        if (cur == start) return {run, start};
    }
    return {run, cur};
}

}  // namespace

ThreadDecomposition thread_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    ThreadDecomposition out;
    out.nearby.assign(n, {});
    out.incidences.assign(n, {});
    std::vector<char> seen(n, 0);

    auto add_thread = [&](Thread t) {
        // Canonical orientation: smaller endpoint first; for equal endpoints
        // the lexicographically smaller interior.
        bool flip = t.v < t.u;
        if (t.u == t.v) {
            std::vector<int> rev(t.interior.rbegin(), t.interior.rend());
            flip = rev < t.interior;
        }
        if (flip) {
            std::swap(t.u, t.v);
            std::reverse(t.interior.begin(), t.interior.end());
        }
        const int id = static_cast<int>(out.threads.size());
        out.incidences[t.u].emplace_back(id, 0);
        out.incidences[t.v].emplace_back(id, 1);
        for (int x : t.interior) {
            out.nearby[t.u].push_back(x);
            out.nearby[t.v].push_back(x);
        }
        out.threads.push_back(std::move(t));
    };

    // Runs of 2-vertices.
    for (int w = 0; w < n; ++w) {
        if (g.degree(w) != 2 || seen[w]) continue;
        auto [left_run, left_end] = walk_run(g, g.neighbors(w)[1], w);
        if (left_end == w) {
            // cycle of 2-vertices; left_run holds it starting at w
            NonThreadComponent comp;
            comp.kind = NonThreadComponent::AllTwoCycle;
            comp.vertices = left_run;
            int lo = static_cast<int>(std::min_element(comp.vertices.begin(), comp.vertices.end()) -
                                      comp.vertices.begin());
            std::rotate(comp.vertices.begin(), comp.vertices.begin() + lo, comp.vertices.end());
            if (comp.vertices.size() > 2 && comp.vertices[1] > comp.vertices.back()) {
                std::reverse(comp.vertices.begin() + 1, comp.vertices.end());
            }
            for (int x : comp.vertices) seen[x] = 1;
            out.non_threads.push_back(std::move(comp));
            continue;
        }
        auto [right_run, right_end] = walk_run(g, w, g.neighbors(w)[1]);
        // Full run from left_end side to right_end side; left_run holds
        // [w, ...] toward neighbors[0], right_run continues past w.
        std::vector<int> run(left_run.rbegin(), left_run.rend());
        run.insert(run.end(), right_run.begin(), right_run.end());
        for (int x : run) seen[x] = 1;
        const bool left_big = g.degree(left_end) >= 3;
        const bool right_big = g.degree(right_end) >= 3;
        if (left_big && right_big) {
            add_thread(Thread{left_end, right_end, run});
        } else {
            NonThreadComponent comp;
            comp.kind = NonThreadComponent::PendantChain;
            comp.vertices = run;
            if (!left_big) comp.vertices.insert(comp.vertices.begin(), left_end);
            if (!right_big) comp.vertices.push_back(right_end);
            if (comp.vertices.back() < comp.vertices.front())
                std::reverse(comp.vertices.begin(), comp.vertices.end());
            out.non_threads.push_back(std::move(comp));
        }
    }

    // 0-threads.
    for (auto [u, v] : g.edges())
        if (g.degree(u) >= 3 && g.degree(v) >= 3) add_thread(Thread{u, v, {}});

    for (auto& row : out.nearby) std::sort(row.begin(), row.end());
    for (const auto& t : out.threads)
        if (t.u != t.v) out.pseudo_adjacent.emplace_back(std::min(t.u, t.v), std::max(t.u, t.v));
    std::sort(out.pseudo_adjacent.begin(), out.pseudo_adjacent.end());
    out.pseudo_adjacent.erase(std::unique(out.pseudo_adjacent.begin(), out.pseudo_adjacent.end()),
                              out.pseudo_adjacent.end());
    return out;
}

G23 build_g23(const Graph& g) {
    G23 out;
    out.graph = Graph(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        const int a = g.degree(u);
        const int b = g.degree(v);
        if (std::min(a, b) == 2 && std::max(a, b) == 3) out.graph.add_edge(u, v);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (out.graph.degree(v) == 0) out.isolated.push_back(v);
    return out;
}

AuxiliaryGraph build_auxiliary_h(const Graph& g, HRule rule) {
    if (g.max_degree() != 3) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 3)
                throw PreconditionError("auxiliary H: vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + " > 3");
        throw PreconditionError("auxiliary H: maximum degree is " +
                                std::to_string(g.max_degree()) + ", not 3");
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1)
            throw PreconditionError("auxiliary H: vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(g.degree(v)));
    auto td = thread_decomposition(g);
    for (const auto& t : td.threads)
        if (t.length() >= 4)
            throw PreconditionError("auxiliary H: 4-thread with interior starting at vertex " +
                                    std::to_string(t.interior.front()));

    AuxiliaryGraph h;
    h.nearby_count.assign(g.vertex_count(), -1);
    h.h_degree.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) {
            h.three_vertices.push_back(v);
            h.nearby_count[v] = static_cast<int>(td.nearby[v].size());
        }
    h.n_h = static_cast<long long>(h.three_vertices.size());

    // An endpoint qualifies under the 2-thread rule when its two other
    // thread slots hold a 3-thread and a 2+-thread.
    auto endpoint_qualifies = [&](int vertex, int tid) {
        // Skip one slot of this thread; a loop thread's second slot stays in
        // `others` since it occupies two of the vertex's three slots.
        std::vector<int> others;
        bool skipped_self = false;
        for (auto [id, slot] : td.incidences[vertex]) {
            (void)slot;
            if (id == tid && !skipped_self) {
                skipped_self = true;
                continue;
            }
            others.push_back(td.threads[id].length());
        }
        if (others.size() != 2) return false;
        std::sort(others.begin(), others.end());
        return others[1] == 3 && others[0] >= 2;
    };

    std::vector<std::pair<int, int>> multi_edges;  // one entry per qualifying thread
    std::vector<int> loop_count(g.vertex_count(), 0);
    for (int tid = 0; tid < static_cast<int>(td.threads.size()); ++tid) {
        const auto& t = td.threads[tid];
        bool qualifies = false;
        if (t.length() == 3) {
            qualifies = true;
        } else if (t.length() == 2) {
            const bool qu = endpoint_qualifies(t.u, tid);
            const bool qv = endpoint_qualifies(t.v, tid);
            qualifies = rule == HRule::EitherEndpoint ? (qu || qv) : (qu && qv);
        }
        if (!qualifies) continue;
        if (t.loop()) {
            loop_count[t.u] += 1;
            h.h_degree[t.u] += 2;
        } else {
            multi_edges.emplace_back(std::min(t.u, t.v), std::max(t.u, t.v));
            h.h_degree[t.u] += 1;
            h.h_degree[t.v] += 1;
        }
    }
    std::sort(multi_edges.begin(), multi_edges.end());
    for (std::size_t i = 0; i < multi_edges.size();) {
        std::size_t j = i;
        while (j < multi_edges.size() && multi_edges[j] == multi_edges[i]) ++j;
        h.edges.push_back(multi_edges[i]);
        h.multiplicity.push_back(static_cast<int>(j - i));
        i = j;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (loop_count[v] > 0) h.loops.emplace_back(v, loop_count[v]);

    for (int v : h.three_vertices) {
        const int i = std::min(h.nearby_count[v], 9);
        h.a_counts[i] += 1;
        if (h.h_degree[v] > 0) {
            h.a_hat_counts[i] += 1;
            ++h.n_hat;
        }
    }
    return h;
}

}  // namespace icl
