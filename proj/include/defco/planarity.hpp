#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "defco/embedding.hpp"
#include "defco/graph.hpp"

namespace defco {

struct NonPlanar {
    /// Edge set of a Kuratowski subdivision, filled when extraction was
    /// requested (found by deleting every edge whose removal keeps the graph
    /// non-planar; what remains is edge-minimal, hence a K5 or K3,3
    /// subdivision).
    std::vector<std::pair<int, int>> witness;
};

using EmbedResult = std::variant<PlanarEmbedding, NonPlanar>;

/// Planar rotation system for a connected simple graph, or NonPlanar.
///
/// Incremental path addition per biconnected block: start from a cycle,
/// repeatedly pick a fragment with the fewest admissible faces and embed one
/// of its paths into such a face; a fragment with no admissible face proves
/// non-planarity. Block embeddings merge freely at cut vertices. Quadratic,
/// hence the default size cap.
EmbedResult embed(const SimpleGraph& g, bool extract_witness = false, int max_vertices = 512);

/// Planarity only; tolerates disconnected input.
bool is_planar(const SimpleGraph& g);

/// Structural check that an edge set is a subdivision of K5 or K3,3.
bool is_kuratowski_subdivision(const std::vector<std::pair<int, int>>& witness);

}  // namespace defco
