#pragma once

#include <cstdint>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

/// Canonical 36-bit adjacency code of a graph on at most 9 vertices: the
/// minimum upper-triangle bit string over all relabelings, found by
/// equitable-partition refinement with individualization.
std::uint64_t canonical_code(const SimpleGraph& g);

/// Isomorph-free census of connected graphs, one level per vertex count
/// (index = n, so entry 0 is empty). Level n+1 is generated from level n by
/// attaching a new vertex with every nonempty neighborhood and deduplicating
/// by canonical code: every connected graph loses some non-cut vertex, so
/// the construction is exhaustive. With planar_only set, each level keeps
/// only planar graphs, which is still exhaustive because vertex-deleted
/// subgraphs of planar graphs stay planar.
std::vector<std::vector<SimpleGraph>> connected_census(int max_n, bool planar_only);

}  // namespace defco
