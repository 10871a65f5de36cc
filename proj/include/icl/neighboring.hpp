#ifndef ICL_NEIGHBORING_HPP
#define ICL_NEIGHBORING_HPP

#include "icl/graph.hpp"

namespace icl {

// Neighboring graph: same vertex set, u~v iff u != v and they share at
// least one common neighbor in g.  An injective coloring of g is exactly a
// proper coloring of this graph.
//
// The parallel build computes rows independently (one vertex per iteration)
// and produces the same sorted adjacency as the serial reference.
Graph neighboring_graph(const Graph& g);
Graph neighboring_graph_serial(const Graph& g);

}  // namespace icl

#endif
