#pragma once

#include <map>
#include <optional>
#include <vector>

#include "defco/coloring.hpp"
#include "defco/embedding.hpp"
#include "defco/graph.hpp"
#include "defco/reduce.hpp"

namespace defco {

struct SolveStats {
    long long nodes = 0;        // decision nodes expanded
    long long forced = 0;       // propagated single-option assignments
    int fallbacks = 0;          // reduction steps rescued by the exact solver
    std::map<int, long long> depth_histogram;  // recoloring plan depths
    double millis = 0.0;
};

struct SolveReport {
    bool feasible = false;
    std::vector<Color> coloring;  // valid iff feasible
    SolveStats stats;
    std::optional<ReductionTrace> trace;
};

/// Enumerates all 2^n class assignments. Guarded at 24 vertices; throws
/// ContractError beyond that.
bool brute_force(const SimpleGraph& g, int d1, int d2);

/// Exact (d1,d2)-coloring decision and construction: depth-first search with
/// forced-move propagation and most-constrained-vertex ordering, backtracking
/// exhaustively. Bounds are canonicalized to d1 <= d2; classes in the report
/// are labeled by their bounds. Class nonemptiness is restored by
/// post-processing (moving one vertex never breaks validity when a class is
/// empty), so a lone vertex is the only infeasible-by-emptiness case the
/// search itself cannot see.
SolveReport exact_solve(const SimpleGraph& g, int d1, int d2);

struct ReduceOptions {
    int base_threshold = 8;  // exact-solve directly at or below this size
    int max_depth = 6;       // recoloring search budget per extension
    ReductionKind strategy = ReductionKind::VertexRemoval;
    bool record_trace = false;
};

/// Constructive (3,4)-coloring of a connected planar embedding with girth
/// >= 5: peel a minimum-degree vertex (or an eligible edge / 3-vertex gadget
/// under the alternative strategies), recurse, then extend the coloring back
/// up, falling back to the exact solver -- once, on the current graph -- when
/// an extension fails. Feasible on every valid input with >= 2 vertices.
/// Throws ContractError on girth < 5.
SolveReport reduce_solve(const PlanarEmbedding& emb, const ReduceOptions& opts = {});

}  // namespace defco
