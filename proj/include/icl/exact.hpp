#ifndef ICL_EXACT_HPP
#define ICL_EXACT_HPP

#include "icl/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icl {

struct Coloring {
    std::vector<int> assignment;  // color id per vertex, -1 = uncolored

    bool total() const {
        for (int c : assignment)
            if (c < 0) return false;
        return true;
    }
    int palette_size() const {
        std::vector<int> seen;
        for (int c : assignment)
            if (c >= 0) {
                bool found = false;
                for (int s : seen) found = found || s == c;
                if (!found) seen.push_back(c);
            }
        return static_cast<int>(seen.size());
    }
};

enum class SolveStatus { Solved, Unsat, Aborted };

// Budgets are search-node counts, not wall clock, so runs reproduce exactly.
struct Budget {
    long long node_limit = 50'000'000;
};

struct ChromaticResult {
    SolveStatus status;  // Solved or Aborted; never a wrong number
    int value = -1;
    Coloring coloring;  // optimal proper coloring when Solved
    long long nodes = 0;
    std::string certificate;
};

struct ListColorResult {
    SolveStatus status;  // Solved, Unsat, or Aborted
    Coloring coloring;   // when Solved
    long long nodes = 0;
    std::string certificate;
};

struct ChromaticIndexResult {
    SolveStatus status;
    int value = -1;  // Delta or Delta+1
    bool class_one = false;
    std::vector<int> edge_colors;  // indexed like g.edges(), when Solved
    long long nodes = 0;
};

// Exact chromatic number: branch and bound with a greedy-clique lower bound
// and DSATUR ordering; ties broken by lowest vertex id.
ChromaticResult chromatic_number(const Graph& g, Budget budget = {});

// chi_i(g) = chi of the neighboring graph; checked against
// Delta <= chi_i <= Delta^2 - Delta + 1 whenever Delta >= 1.
ChromaticResult injective_chromatic_number(const Graph& g, Budget budget = {});

// Proper coloring with c(v) in lists[v], or a correct UNSAT verdict.
ListColorResult list_color_exact(const Graph& g, const std::vector<std::vector<int>>& lists,
                                 Budget budget = {});

// Exact chromatic index via the line graph; value is Delta or Delta+1 and
// class_one iff it is Delta.  Requires at least one edge.
ChromaticIndexResult chromatic_index(const Graph& g, Budget budget = {});

// Line graph: one vertex per edge of g (ordered like g.edges()).
Graph line_graph(const Graph& g);

struct InjectiveViolation {
    int a = -1;
    int b = -1;
    int common = -1;  // shared neighbor of a and b
};

// OK (nullopt) iff no two vertices with a common neighbor share a color.
// The coloring must be total.
std::optional<InjectiveViolation> validate_injective(const Graph& g, const Coloring& c);

}  // namespace icl

#endif
