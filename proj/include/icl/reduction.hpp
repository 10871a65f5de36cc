#ifndef ICL_REDUCTION_HPP
#define ICL_REDUCTION_HPP

#include "icl/embedding.hpp"
#include "icl/exact.hpp"
#include "icl/graph.hpp"
#include "icl/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icl {

enum class TheoremClassTag { MAD52_D4, MAD52_D3, MAD94_D4, MAD4219_D3, PLANAR_G9, PLANAR_G13 };

// A theorem class bundles the hypotheses and the palette target of one of
// the paper-style statements the engine can replay.
struct TheoremClass {
    TheoremClassTag tag;

    static std::optional<TheoremClass> from_name(const std::string& name);
    std::string name() const;

    bool plus_one() const;  // target Delta+1 (vs Delta)
    int target_palette(int delta) const { return plus_one() ? delta + 1 : delta; }
    bool planar() const;
    int girth_min() const;           // 0 when not a planar class
    int delta_min() const;           // 4, or 3 for the Delta=3 classes
    bool delta_exactly_3() const;
    std::optional<Rational> mad_bound() const;  // nullopt for planar classes
    bool mad_strict() const;                    // strict (<) vs non-strict (<=)
};

struct HypothesisViolation {
    std::string hypothesis;  // e.g. "delta", "mad", "girth", "embedding"
    std::string witness;
};

// Verifies Delta, exact mad, or girth (embedding required and validated for
// planar classes).  nullopt = all hypotheses hold.
std::optional<HypothesisViolation> check_hypotheses(const Graph& g, const TheoremClass& cls,
                                                    const PlaneEmbedding* emb);

enum class ReductionKind {
    ONE_VERTEX,
    TWO_THREAD,
    FOUR_THREAD,
    THREE_THREAD_3END,
    L6_CONFIG,
    H5A_CONFIG,
    RC4,
    RC5,
    RC6,
    G23_CYCLE,
    AUXH_CYCLE,
    ALL2_CYCLE,        // component that is a cycle of 2-vertices
    PINCH_CYCLE,       // cycle of 2-vertices attached at a single 3-vertex, Delta=3 palette
    THEOREM_B_GLOBAL,  // terminal: color the whole remainder via G^(2) list coloring
};

std::string kind_name(ReductionKind k);

struct Reduction {
    ReductionKind kind;
    std::vector<int> deletion_set;     // vertices removed before recursion
    std::vector<int> extension_order;  // greedy script (uncolor_set members included)
    std::vector<int> uncolor_set;      // colored vertices reset before the script runs
    std::vector<int> cycle;            // C / C' vertex walk for the cycle kinds
    std::vector<std::pair<std::string, int>> anchors;
};

// First reducible configuration under the class's fixed priority order
// (local kinds before global cycle kinds; lexicographically smallest
// anchors within a kind).  nullopt is not an error: it marks a
// theorem-violation candidate.
std::optional<Reduction> find_reduction(const Graph& g, const TheoremClass& cls,
                                        const PlaneEmbedding* emb);

struct TheoremViolation {
    Graph irreducible;  // the subgraph the engine could not handle
    std::string reason;
};

struct ConstructiveResult {
    bool ok = false;
    Coloring coloring;       // on the input graph when ok
    int palette_used = 0;    // distinct colors
    int target = 0;          // palette bound promised by the class
    int fallback_count = 0;  // extensions that needed the exact micro-solver
    std::vector<std::string> notes;
    std::optional<TheoremViolation> violation;
};

// Deletes reducible configurations, recurses, and extends per the proofs.
// The palette target is fixed once from the input Delta; every returned
// coloring passes validate_injective within that many colors.
ConstructiveResult color_constructive(const Graph& g, const TheoremClass& cls,
                                      const PlaneEmbedding* emb);

struct TraceStep {
    Reduction reduction;  // vertex ids refer to graph_before
    Graph graph_before;
    Graph graph_after;
};

struct Trace {
    std::vector<TraceStep> steps;
    Graph base_graph;  // what the base case colored
    ConstructiveResult result;
};

// Deterministic trace of color_constructive; re-verifies each deletion
// (configuration shape, mad monotonicity for the mad classes, girth for the
// planar ones).
Trace replay_trace(const Graph& g, const TheoremClass& cls, const PlaneEmbedding* emb);

}  // namespace icl

#endif
