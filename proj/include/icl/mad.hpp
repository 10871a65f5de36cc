#ifndef ICL_MAD_HPP
#define ICL_MAD_HPP

#include "icl/graph.hpp"
#include "icl/rational.hpp"

#include <vector>

namespace icl {

struct MadResult {
    Rational value;                // max over nonempty S of 2|E(S)|/|V(S)|
    std::vector<int> witness;      // one vertex set attaining the maximum
};

// Exact maximum average degree.  Binary search on the density over rationals
// (candidate values have denominator <= n), each probe answered by a max-flow
// feasibility test for "exists subgraph with 2|E(S)| > lambda |V(S)|"; the
// witness comes from the source side of the final min cut.
MadResult mad_exact(const Graph& g);

// Brute-force reference: scans all nonempty vertex subsets of the induced
// subgraph lattice.  Only for n <= 24 or so; the parallel variant splits the
// subset range across threads.  Induced subgraphs suffice since density is
// maximized by an induced subgraph.
MadResult mad_bruteforce(const Graph& g);
MadResult mad_bruteforce_serial(const Graph& g);

}  // namespace icl

#endif
