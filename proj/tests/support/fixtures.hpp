#pragma once

#include <vector>

#include "defco/embedding.hpp"

namespace defco::fixtures {

/// Attachments hung off one ring vertex, embedded on the outer side:
///   leaves    -- pendant vertices (degree 1, not 2-vertices, not 3+)
///   twopaths  -- pendant length-2 paths (the middle is a 2-neighbor)
///   deeps     -- pendant roots carrying two leaves (a 3+-neighbor)
struct RingVertexSpec {
    int leaves = 0;
    int twopaths = 0;
    int deeps = 0;
};

/// Inner k-face with boundary 0..k-1 (in order) and the given attachments;
/// the only other face is the big outer one. Attachment ids follow the ring
/// ids in ring order: per vertex first leaves, then twopaths (middle before
/// end), then deeps (root before its two leaves).
PlanarEmbedding ring_with_trees(const std::vector<RingVertexSpec>& specs);

/// Two pentagons sharing a cut vertex (id 0) that is made a 6p-vertex with
/// one deep and one leaf attachment. Pentagon interiors are faces; the outer
/// walk passes the cut vertex twice.
PlanarEmbedding bowtie_pentagons();

}  // namespace defco::fixtures
