#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "defco/errors.hpp"
#include "defco/graph.hpp"

namespace defco {

/// Boundary walk of a face: the cyclic vertex sequence traced by following
/// directed edges. A vertex (or edge) may appear more than once at cut
/// vertices and bridges; the face degree counts repetitions.
struct Face {
    std::vector<int> walk;
    int degree() const { return static_cast<int>(walk.size()); }
};

/// Immutable rotation-system embedding of a connected simple planar graph.
///
/// Faces are derived by the next-traversal rule: after the directed edge
/// (u, v), continue with (v, w) where w follows u in the rotation of v.
/// Construction verifies simplicity, symmetry, connectivity, and Euler's
/// formula; a rotation system whose face count breaks V - E + F = 2 encodes
/// a surface of positive genus and is rejected.
///
/// Safe to share across concurrent readers once built.
class PlanarEmbedding {
public:
    static PlanarEmbedding build(std::vector<std::vector<int>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    /// Id of edge {u, v}; throws if absent.
    int edge_id(int u, int v) const;
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    /// The faces on the two sides of an edge (equal for a bridge).
    std::pair<int, int> faces_of_edge(int e) const;

    /// Face containing the directed edge (v, rotations()[v][slot]).
    int face_of_dart(int v, int slot) const { return face_of_dart_[dart_id(v, slot)]; }

    /// Length of a shortest cycle; nullopt when acyclic.
    std::optional<int> girth() const { return graph_.girth(); }

    const SimpleGraph& graph() const { return graph_; }

private:
    PlanarEmbedding() = default;

    int dart_id(int v, int slot) const { return dart_start_[v] + slot; }
    int slot_of(int v, int neighbor) const;

    int n_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<int> dart_start_;
    std::vector<int> face_of_dart_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Face> faces_;
    SimpleGraph graph_;
};

}  // namespace defco
