#include "icl/mad.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace icl {

namespace {

// Dinic's max flow on a small static network.  Capacities fit in int64 at
// the scales used here.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    void add_edge(int u, int v, std::int64_t cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += pushed;
        }
        return flow;
    }

    // After run(): vertices reachable from s in the residual network.
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e = head_[x]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::vector<int> queue{s};
        level_[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int e = head_[x]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 0 && level_[edges_[e].to] == -1) {
                    level_[edges_[e].to] = level_[x] + 1;
                    queue.push_back(edges_[e].to);
                }
        }
        return level_[t] != -1;
    }

    std::int64_t dfs(int x, int t, std::int64_t limit) {
        if (x == t) return limit;
        for (int& e = iter_[x]; e != -1; e = edges_[e].next) {
            Edge& fwd = edges_[e];
            if (fwd.cap <= 0 || level_[fwd.to] != level_[x] + 1) continue;
            std::int64_t pushed = dfs(fwd.to, t, std::min(limit, fwd.cap));
            if (pushed > 0) {
                fwd.cap -= pushed;
                edges_[e ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

std::int64_t to_i64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("mad_exact: probe value out of int64 range");
    return x.convert_to<std::int64_t>();
}

// Decides whether some nonempty S has 2|E(S)| > (p/q)|V(S)|; when yes and
// `witness` is given, fills it with the source side of the min cut.
// Network: source -> edge node (cap 2q), edge node -> endpoints (cap inf),
// vertex -> sink (cap p).
bool density_exceeds(const Graph& g, std::int64_t p, std::int64_t q, std::vector<int>* witness) {
    const int n = g.vertex_count();
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    const int source = n + m;
    const int sink = n + m + 1;
    const std::int64_t inf = std::int64_t(2) * q * m + p * std::int64_t(n) + 1;
    MaxFlow net(n + m + 2);
    for (int i = 0; i < m; ++i) {
        net.add_edge(source, n + i, 2 * q);
        net.add_edge(n + i, es[i].first, inf);
        net.add_edge(n + i, es[i].second, inf);
    }
    for (int v = 0; v < n; ++v) net.add_edge(v, sink, p);
    const std::int64_t flow = net.run(source, sink);
    if (flow >= std::int64_t(2) * q * m) return false;
    if (witness) {
        auto side = net.source_side(source);
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (side[v]) witness->push_back(v);
    }
    return true;
}

bool density_exceeds(const Graph& g, const Rational& lambda, std::vector<int>* witness) {
    return density_exceeds(g, to_i64(lambda.num()), to_i64(lambda.den()), witness);
}

Rational density_of(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : subset) in[v] = 1;
    long long e = 0;
    for (int v : subset)
        for (int w : g.neighbors(v))
            if (in[w] && w > v) ++e;
    return Rational(2 * e, static_cast<long long>(subset.size()));
}

}  // namespace

MadResult mad_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad_exact: empty graph");
    const int m = g.edge_count();
    if (m == 0) return {Rational(0), {0}};

    // Densities are fractions with denominator <= n; distinct candidates
    // differ by at least 1/n^2.  Keep f(lo) = true, mad <= hi, and shrink
    // (lo, hi] until it holds a single candidate.
    Rational lo(2LL * m, n);
    if (!density_exceeds(g, lo, nullptr)) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return {lo, all};
    }
    Rational hi(n - 1);
    const Rational gap(1, static_cast<long long>(n) * n);
    while (hi - lo > gap) {
        Rational mid = (lo + hi) / Rational(2);
        if (density_exceeds(g, mid, nullptr))
            lo = mid;
        else
            hi = mid;
    }
    std::vector<int> witness;
    if (!density_exceeds(g, lo, &witness) || witness.empty())
        throw std::logic_error("mad_exact: lost the search invariant");
    return {density_of(g, witness), witness};
}

MadResult mad_bruteforce_serial(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad_bruteforce: empty graph");
    if (n > 24) throw std::invalid_argument("mad_bruteforce: too many vertices");
    std::vector<std::uint32_t> bits(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) bits[v] |= std::uint32_t(1) << w;
    long long best_e = 0;
    int best_v = 1;
    std::uint32_t best_mask = 1;
    const std::uint32_t last = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 1; mask <= last; ++mask) {
        long long twice = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            twice += std::popcount(bits[v] & mask);
        }
        const int sz = std::popcount(mask);
        // compare twice/sz against best_e*2/best_v without division
        if (twice * best_v > 2 * best_e * sz) {
            best_e = twice / 2;
            best_v = sz;
            best_mask = mask;
        }
    }
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint32_t(1) << v)) witness.push_back(v);
    return {Rational(2 * best_e, best_v), witness};
}

MadResult mad_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad_bruteforce: empty graph");
    if (n > 24) throw std::invalid_argument("mad_bruteforce: too many vertices");
    if (n <= 14) return mad_bruteforce_serial(g);
    std::vector<std::uint32_t> bits(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) bits[v] |= std::uint32_t(1) << w;
    const std::uint64_t last = (std::uint64_t(1) << n) - 1;

    long long best_e = 0;
    int best_v = 1;
    std::uint64_t best_mask = 1;
#pragma omp parallel
    {
        long long my_e = 0;
        int my_v = 1;
        std::uint64_t my_mask = 1;
#pragma omp for schedule(static)
        for (std::int64_t mask = 1; mask <= static_cast<std::int64_t>(last); ++mask) {
            const std::uint32_t m32 = static_cast<std::uint32_t>(mask);
            long long twice = 0;
            for (std::uint32_t rest = m32; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                twice += std::popcount(bits[v] & m32);
            }
            const int sz = std::popcount(m32);
            if (twice * my_v > 2 * my_e * sz) {
                my_e = twice / 2;
                my_v = sz;
                my_mask = static_cast<std::uint64_t>(mask);
            }
        }
#pragma omp critical
        {
            const long long lhs = 2 * my_e * best_v;
            const long long rhs = 2 * best_e * my_v;
            if (lhs > rhs || (lhs == rhs && my_mask < best_mask)) {
                best_e = my_e;
                best_v = my_v;
                best_mask = my_mask;
            }
        }
    }
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint64_t(1) << v)) witness.push_back(v);
    return {Rational(2 * best_e, best_v), witness};
}

}  // namespace icl
