#include "defco/reduce.hpp"

#include <algorithm>
#include <string>

#include "defco/errors.hpp"

namespace defco {

Measure measure_of(const SimpleGraph& g) {
    Measure m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) ++m.plus3;
    m.size = g.vertex_count() + g.edge_count();
    return m;
}

std::pair<SimpleGraph, ReductionStep> reduce_edge(const SimpleGraph& g, std::pair<int, int> e) {
    auto [x, y] = e;
    if (!g.adjacent(x, y)) throw ContractError("reduce_edge: no such edge");
    if (g.degree(x) >= 5 || g.degree(y) >= 5)
        throw ContractError("reduce_edge: endpoint with degree at least 5 at edge (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
    ReductionStep step;
    step.kind = ReductionKind::EdgeRemoval;
    step.removed_edge = e;
    step.measure_before = measure_of(g);
    SimpleGraph reduced = g;
    reduced.remove_edge(x, y);
    step.measure_after = measure_of(reduced);
    return {std::move(reduced), step};
}

std::vector<Color> extend_edge(const SimpleGraph& g, std::vector<Color> phi,
                               std::pair<int, int> e) {
    auto [x, y] = e;
    auto same_without_e = [&](int v) {
        int cnt = 0;
        for (int w : g.neighbors(v))
            if (phi[w] == phi[v] && !(v == x && w == y) && !(v == y && w == x)) ++cnt;
        return cnt;
    };
    if (phi[x] == Color::C3 && phi[y] == Color::C3) {
        if (same_without_e(x) >= 3)
            phi[x] = Color::C4;
        else if (same_without_e(y) >= 3)
            phi[y] = Color::C4;
    }
    auto res = verify(g, phi, 3, 4);
    if (!res.violations.empty())
        throw InternalError("extend_edge: lifted coloring invalid at edge (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
    return phi;
}

std::pair<PlanarEmbedding, ReductionStep> reduce_3vertex(const PlanarEmbedding& emb, int v) {
    if (emb.degree(v) != 3)
        throw ContractError("reduce_3vertex: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(emb.degree(v)) + ", need 3");
    const int n = emb.vertex_count();
    std::array<int, 3> nb{emb.rotations()[v][0], emb.rotations()[v][1], emb.rotations()[v][2]};
    std::array<int, 3> mid{n, n + 1, n + 2};  // mid[i] joins nb[i] and nb[i+1]

    std::vector<std::vector<int>> rot(n + 3);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        rot[u] = emb.rotations()[u];
    }
    // At nb[i], v's slot becomes [mid[i], mid[i-1]]: the corner faces around
    // the former position of v each pick up one length-2 path.
    for (int i = 0; i < 3; ++i) {
        auto& r = rot[nb[i]];
        auto it = std::find(r.begin(), r.end(), v);
        int pos = static_cast<int>(it - r.begin());
        *it = mid[i];
        r.insert(r.begin() + pos + 1, mid[(i + 2) % 3]);
        rot[mid[i]] = {nb[i], nb[(i + 1) % 3]};
    }

    ReductionStep step;
    step.kind = ReductionKind::ThreeVertexGadget;
    step.removed_vertex = v;
    step.gadget_neighbors = nb;
    step.gadget_midpoints = mid;
    step.measure_before = measure_of(emb.graph());

    // Vertex v keeps its id as an isolated placeholder only in trace
    // bookkeeping; the reduced embedding drops it by compaction.
    std::vector<int> remap(n + 3, -1);
    int next = 0;
    for (int u = 0; u < n + 3; ++u)
        if (u != v) remap[u] = next++;
    std::vector<std::vector<int>> packed(next);
    for (int u = 0; u < n + 3; ++u) {
        if (u == v) continue;
        packed[remap[u]] = std::move(rot[u]);
        for (int& w : packed[remap[u]]) w = remap[w];
    }
    auto reduced = PlanarEmbedding::build(std::move(packed));
    step.measure_after = measure_of(reduced.graph());
    return {std::move(reduced), step};
}

std::vector<Color> extend_3vertex(const SimpleGraph& original, std::vector<Color> gadget_phi,
                                  const ReductionStep& step) {
    if (step.kind != ReductionKind::ThreeVertexGadget)
        throw ContractError("extend_3vertex: step is not a gadget step");
    int v = step.removed_vertex;

    // Gadget graph ids: v was compacted away, ids above v shifted down by one.
    auto gadget_id = [&](int original_id) { return original_id < v ? original_id : original_id - 1; };
    std::array<Color, 3> mc;
    for (int i = 0; i < 3; ++i) mc[i] = gadget_phi[gadget_id(step.gadget_midpoints[i])];

    Color shared = mc[0] == mc[1] || mc[0] == mc[2] ? mc[0] : mc[1];

    std::vector<Color> phi(original.vertex_count());
    for (int u = 0; u < original.vertex_count(); ++u)
        phi[u] = u == v ? shared : gadget_phi[gadget_id(u)];

    auto res = verify(original, phi, 3, 4);
    if (!res.violations.empty())
        throw InternalError("extend_3vertex: lifted coloring invalid at vertex " +
                            std::to_string(v));
    return phi;
}

int find_low_vertex(const SimpleGraph& g) {
    if (g.vertex_count() == 0) throw ContractError("find_low_vertex: empty graph");
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    if (g.degree(best) > 3)
        throw ContractError(
            "find_low_vertex: minimum degree exceeds 3; input is not planar with girth >= 5");
    return best;
}

bool extend_vertex(DefectiveColoring& coloring, int v, int max_depth, int* plan_depth) {
    for (Color c : {Color::C3, Color::C4}) {
        if (!coloring.can_assign(v, c)) continue;
        coloring.assign(v, c);
        if (plan_depth) *plan_depth = 1;
        return true;
    }
    auto plan = recoloring_search(coloring, v, max_depth);
    if (!plan) return false;
    for (const auto& move : plan->moves) {
        if (move.vertex == v)
            coloring.assign(v, move.color);
        else {
            auto out = coloring.safe_flip(move.vertex);
            if (!out.flipped)
                throw InternalError("extend_vertex: plan replay hit a blocked flip");
        }
    }
    if (plan_depth) *plan_depth = plan->depth();
    return true;
}

}  // namespace defco
