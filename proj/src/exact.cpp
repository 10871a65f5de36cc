#include "icl/exact.hpp"

#include "icl/neighboring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icl {

namespace {

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int c : clique) ok = ok && g.has_edge(v, c);
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, long long node_limit)
        : g_(g), limit_(node_limit), color_(g.vertex_count(), -1) {}

    // Returns false when the budget ran out before the search finished.
    bool run(const std::vector<int>& clique, Coloring* best, int* best_k) {
        const int n = g_.vertex_count();
        if (n == 0) {
            *best_k = 0;
            best->assignment.clear();
            return true;
        }
        // Initial upper bound: DSATUR greedy.
        greedy(best, best_k);
        best_ = *best;
        best_k_ = *best_k;
        lower_ = static_cast<int>(clique.size());
        if (lower_ < best_k_) {
            std::fill(color_.begin(), color_.end(), -1);
            // Symmetry breaking: pin distinct colors on the clique.
            for (int i = 0; i < static_cast<int>(clique.size()); ++i) color_[clique[i]] = i;
            used_ = static_cast<int>(clique.size());
            colored_ = static_cast<int>(clique.size());
            aborted_ = false;
            descend();
            if (aborted_) return false;
        }
        *best = best_;
        *best_k = best_k_;
        return true;
    }

    long long nodes() const { return nodes_; }

private:
    void greedy(Coloring* out, int* k) {
        const int n = g_.vertex_count();
        std::fill(color_.begin(), color_.end(), -1);
        int used = 0;
        for (int step = 0; step < n; ++step) {
            int v = pick();
            int c = 0;
            while (conflicts(v, c)) ++c;
            color_[v] = c;
            used = std::max(used, c + 1);
        }
        out->assignment = color_;
        *k = used;
    }

    int pick() const {
        // Highest saturation, then highest degree, then lowest id.
        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v] != -1) continue;
            int sat = saturation(v);
            if (sat > best_sat ||
                (sat == best_sat && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    int saturation(int v) const {
        std::vector<int> cols;
        for (int w : g_.neighbors(v))
            if (color_[w] != -1 &&
                std::find(cols.begin(), cols.end(), color_[w]) == cols.end())
                cols.push_back(color_[w]);
        return static_cast<int>(cols.size());
    }

    bool conflicts(int v, int c) const {
        for (int w : g_.neighbors(v))
            if (color_[w] == c) return true;
        return false;
    }

    void descend() {
        if (aborted_ || used_ >= best_k_) return;
        if (colored_ == g_.vertex_count()) {
            best_k_ = used_;
            best_.assignment = color_;
            return;
        }
        const int v = pick();
        const int cap = std::min(used_ + 1, best_k_ - 1);
        for (int c = 0; c < cap; ++c) {
            if (conflicts(v, c)) continue;
            if (++nodes_ > limit_) {
                aborted_ = true;
                return;
            }
            color_[v] = c;
            ++colored_;
            const int prev_used = used_;
            used_ = std::max(used_, c + 1);
            descend();
            used_ = prev_used;
            --colored_;
            color_[v] = -1;
            if (aborted_ || best_k_ <= lower_) return;
        }
    }

    const Graph& g_;
    long long limit_;
    long long nodes_ = 0;
    std::vector<int> color_;
    Coloring best_;
    int best_k_ = 0;
    int lower_ = 0;
    int used_ = 0;
    int colored_ = 0;
    bool aborted_ = false;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, Budget budget) {
    ChromaticResult out;
    DsaturSearch search(g, budget.node_limit);
    auto clique = greedy_clique(g);
    Coloring best;
    int k = 0;
    const bool finished = search.run(clique, &best, &k);
    out.nodes = search.nodes();
    if (!finished) {
        out.status = SolveStatus::Aborted;
        std::ostringstream cert;
        cert << "aborted: node budget " << budget.node_limit << " exhausted";
        out.certificate = cert.str();
        return out;
    }
    out.status = SolveStatus::Solved;
    out.value = k;
    out.coloring = best;
    std::ostringstream cert;
    cert << "optimal " << k << ": clique lower bound " << clique.size() << ", " << out.nodes
         << " nodes";
    out.certificate = cert.str();
    return out;
}

ChromaticResult injective_chromatic_number(const Graph& g, Budget budget) {
    auto result = chromatic_number(neighboring_graph(g), budget);
    if (result.status == SolveStatus::Solved) {
        const int delta = g.max_degree();
        if (delta >= 1 &&
            (result.value < delta || result.value > delta * delta - delta + 1))
            throw std::logic_error("injective chromatic number outside [Delta, Delta^2-Delta+1]");
    }
    return result;
}

ListColorResult list_color_exact(const Graph& g, const std::vector<std::vector<int>>& lists,
                                 Budget budget) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n)
        throw std::invalid_argument("list_color_exact: lists size mismatch");
    ListColorResult out;
    std::vector<std::vector<int>> sorted_lists(lists);
    for (auto& l : sorted_lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    std::vector<int> color(n, -1);
    long long nodes = 0;
    bool aborted = false;

    auto remaining = [&](int v) {
        int count = 0;
        for (int c : sorted_lists[v]) {
            bool bad = false;
            for (int w : g.neighbors(v)) bad = bad || color[w] == c;
            if (!bad) ++count;
        }
        return count;
    };

    // MRV backtracking: fewest remaining choices first, lowest id on ties.
    auto solve = [&](auto&& self) -> bool {
        int v = -1;
        int best_rem = -1;
        for (int x = 0; x < n; ++x) {
            if (color[x] != -1) continue;
            int rem = remaining(x);
            if (v == -1 || rem < best_rem) {
                v = x;
                best_rem = rem;
            }
        }
        if (v == -1) return true;
        for (int c : sorted_lists[v]) {
            bool bad = false;
            for (int w : g.neighbors(v)) bad = bad || color[w] == c;
            if (bad) continue;
            if (++nodes > budget.node_limit) {
                aborted = true;
                return false;
            }
            color[v] = c;
            if (self(self)) return true;
            color[v] = -1;
            if (aborted) return false;
        }
        return false;
    };

    const bool solved = solve(solve);
    out.nodes = nodes;
    std::ostringstream cert;
    if (aborted) {
        out.status = SolveStatus::Aborted;
        cert << "aborted: node budget " << budget.node_limit << " exhausted";
    } else if (solved) {
        out.status = SolveStatus::Solved;
        out.coloring.assignment = color;
        cert << "list coloring found, " << nodes << " nodes";
    } else {
        out.status = SolveStatus::Unsat;
        cert << "refuted: search exhausted after " << nodes << " nodes";
    }
    out.certificate = cert.str();
    return out;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(static_cast<int>(i),
                                                                 static_cast<int>(j));
        }
    return lg;
}

ChromaticIndexResult chromatic_index(const Graph& g, Budget budget) {
    if (g.max_degree() < 1)
        throw std::invalid_argument("chromatic_index: graph has no edges");
    const int delta = g.max_degree();
    Graph lg = line_graph(g);
    std::vector<int> palette(delta);
    std::iota(palette.begin(), palette.end(), 0);
    std::vector<std::vector<int>> lists(lg.vertex_count(), palette);
    ChromaticIndexResult out;
    auto at_delta = list_color_exact(lg, lists, budget);
    out.nodes = at_delta.nodes;
    if (at_delta.status == SolveStatus::Aborted) {
        out.status = SolveStatus::Aborted;
        return out;
    }
    if (at_delta.status == SolveStatus::Solved) {
        out.status = SolveStatus::Solved;
        out.value = delta;
        out.class_one = true;
        out.edge_colors = at_delta.coloring.assignment;
        return out;
    }
    // Class 2; a Delta+1 edge coloring exists for every simple graph.
    for (auto& l : lists) l.push_back(delta);
    auto at_delta1 = list_color_exact(lg, lists, budget);
    out.nodes += at_delta1.nodes;
    if (at_delta1.status != SolveStatus::Solved) {
        out.status = at_delta1.status == SolveStatus::Aborted ? SolveStatus::Aborted
                                                              : SolveStatus::Unsat;
        return out;
    }
    out.status = SolveStatus::Solved;
    out.value = delta + 1;
    out.class_one = false;
    out.edge_colors = at_delta1.coloring.assignment;
    return out;
}

std::optional<InjectiveViolation> validate_injective(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count() || !c.total())
        throw std::invalid_argument("validate_injective: coloring is not total");
    for (int w = 0; w < g.vertex_count(); ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (c.assignment[nb[i]] == c.assignment[nb[j]])
                    return InjectiveViolation{nb[i], nb[j], w};
    }
    return std::nullopt;
}

}  // namespace icl
