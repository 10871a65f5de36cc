#ifndef ICL_EMBEDDING_HPP
#define ICL_EMBEDDING_HPP

#include "icl/graph.hpp"

#include <string>
#include <vector>

namespace icl {

struct Face {
    // Closed walk as vertex sequence; walk[i] -> walk[i+1] are the directed
    // edges of the face, wrapping at the end.  degree == walk.size().
    std::vector<int> walk;
    int degree() const { return static_cast<int>(walk.size()); }
};

// Combinatorial embedding: a rotation system over a host graph plus the face
// walks it induces.  Faces are derived, never supplied.  Validation checks
// that every rotation is a permutation of the adjacency set, that every
// directed edge lies on exactly one face, and Euler's identity
// V - E + F = 1 + (#components); violations are rejected.
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;
    PlaneEmbedding(Graph host, std::vector<std::vector<int>> rotation);

    const Graph& host() const { return host_; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<Face>& faces() const { return faces_; }

    // Neighbor following `from` in v's cyclic order.
    int next_in_rotation(int v, int from) const;

    // Face id holding directed edge u->v.
    int face_of(int u, int v) const;

    // Restriction to the host minus `drop`; rotations keep their cyclic
    // order, faces are recomputed.  Returns the new embedding plus the
    // old-id list of surviving vertices.
    std::pair<PlaneEmbedding, std::vector<int>> without(const std::vector<int>& drop) const;

    // Replaces every edge by a path with counts[e] interior vertices (indexed
    // like host().edges()); subdivision preserves the embedding.  New
    // vertices are appended edge by edge.
    PlaneEmbedding subdivide_edges(const std::vector<int>& counts) const;

private:
    void trace_faces();
    Graph host_;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> face_of_;  // parallel to rotation_: face id of (v -> rotation_[v][i])
};

// Rotation-system format: line k lists vertex k's neighbors in cyclic order,
// space separated (blank line for an isolated vertex).  Must be a
// permutation of the adjacency set.
PlaneEmbedding parse_embedding(const Graph& host, const std::string& text);
std::string format_embedding(const PlaneEmbedding& emb);

}  // namespace icl

#endif
