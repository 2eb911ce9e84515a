#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "defco/coloring.hpp"
#include "defco/embedding.hpp"
#include "defco/graph.hpp"

namespace defco {

enum class ReductionKind { EdgeRemoval, ThreeVertexGadget, VertexRemoval };

/// Lexicographic progress measure: (number of 3+-vertices, |V| + |E|).
/// Every reduction step must strictly decrease it, which is what makes
/// reduction sequences terminate.
struct Measure {
    long plus3 = 0;
    long size = 0;
    bool operator<(const Measure& o) const {
        return plus3 != o.plus3 ? plus3 < o.plus3 : size < o.size;
    }
    bool operator==(const Measure& o) const = default;
};

Measure measure_of(const SimpleGraph& g);

struct ReductionStep {
    ReductionKind kind = ReductionKind::VertexRemoval;
    int removed_vertex = -1;
    std::vector<int> vertex_neighbors;        // neighbors at removal time
    std::pair<int, int> removed_edge{-1, -1};
    std::array<int, 3> gadget_neighbors{-1, -1, -1};  // v's neighbors in rotation order
    std::array<int, 3> gadget_midpoints{-1, -1, -1};  // midpoints[i] joins nbrs[i], nbrs[i+1]
    Measure measure_before, measure_after;
};

/// Reduction sequence plus the terminal graph handed to the base-case
/// solver; extensions replay the steps in reverse.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<int> base_vertices;
    std::vector<std::pair<int, int>> base_edges;
};

/// Removes an edge whose endpoints both have degree <= 4.
/// Throws ContractError when an endpoint has degree >= 5.
std::pair<SimpleGraph, ReductionStep> reduce_edge(const SimpleGraph& g, std::pair<int, int> e);

/// Lifts a valid coloring of g - e back to g: differing endpoint colors (or
/// both at color 4 with endpoint degrees <= 4) need no change; two color-3
/// endpoints with one of them 3-saturated get that endpoint flipped to 4.
/// Throws InternalError when the result fails verification -- the extension
/// is total, so that is a bug, never an expected outcome.
std::vector<Color> extend_edge(const SimpleGraph& g, std::vector<Color> phi,
                               std::pair<int, int> e);

/// Replaces a 3-vertex v by three length-2 paths between its neighbors,
/// embedded in the three corners around v's former position. Preserves girth
/// >= 5 on girth >= 5 inputs (the pairwise distances between v's neighbors do
/// not change) and lowers the 3+-vertex count by one when those neighbors all
/// keep degree >= 3.
std::pair<PlanarEmbedding, ReductionStep> reduce_3vertex(const PlanarEmbedding& emb, int v);

/// Pigeonhole extension for the gadget: two midpoints share a color, v takes
/// it, midpoints drop out. The returned assignment is sized for the original
/// graph. Throws InternalError on verification failure (a bug by the same
/// argument as extend_edge).
std::vector<Color> extend_3vertex(const SimpleGraph& original, std::vector<Color> gadget_phi,
                                  const ReductionStep& step);

/// A minimum-degree vertex; its degree is <= 3 for every planar graph of
/// girth >= 5 (edge count is at most 5(n-2)/3, so the average degree stays
/// below 10/3). Throws ContractError(NoLowVertex) otherwise: the input broke
/// the planarity/girth contract.
int find_low_vertex(const SimpleGraph& g);

/// Colors the uncolored vertex v: color 3 directly, then color 4, then a
/// bounded recoloring search. Applies the winning moves to the coloring and
/// reports the plan depth; returns false if everything within max_depth
/// fails (the caller falls back to the exact solver).
bool extend_vertex(DefectiveColoring& coloring, int v, int max_depth, int* plan_depth = nullptr);

}  // namespace defco
