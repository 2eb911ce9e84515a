#include "defco/solve.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "defco/errors.hpp"

namespace defco {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Backtracking core over an induced vertex set. Ignores class nonemptiness.
class ExactSearch {
public:
    ExactSearch(const SimpleGraph& g, const std::vector<int>& verts, int b3, int b4,
                SolveStats& stats)
        : g_(g), verts_(verts), b3_(b3), b4_(b4), stats_(stats) {
        int n = g.vertex_count();
        color_.assign(n, Color::None);
        cnt3_.assign(n, 0);
        cnt4_.assign(n, 0);
    }

    std::optional<std::vector<Color>> run() {
        if (dfs()) return color_;
        return std::nullopt;
    }

private:
    int bound(Color c) const { return c == Color::C3 ? b3_ : b4_; }
    int& cnt(Color c, int v) { return c == Color::C3 ? cnt3_[v] : cnt4_[v]; }

    bool feasible(int v, Color c) {
        if (cnt(c, v) > bound(c)) return false;
        for (int w : g_.neighbors(v))
            if (color_[w] == c && cnt(c, w) >= bound(c)) return false;
        return true;
    }

    void set(int v, Color c) {
        color_[v] = c;
        for (int w : g_.neighbors(v)) ++cnt(c, w);
    }

    void unset(int v) {
        Color c = color_[v];
        color_[v] = Color::None;
        for (int w : g_.neighbors(v)) --cnt(c, w);
    }

    bool dfs() {
        std::vector<int> trail;
        // Propagate forced moves: a vertex with one live color takes it.
        bool changed = true;
        bool dead = false;
        while (changed && !dead) {
            changed = false;
            for (int v : verts_) {
                if (color_[v] != Color::None) continue;
                bool ok3 = feasible(v, Color::C3);
                bool ok4 = feasible(v, Color::C4);
                if (!ok3 && !ok4) {
                    dead = true;
                    break;
                }
                if (ok3 != ok4) {
                    set(v, ok3 ? Color::C3 : Color::C4);
                    trail.push_back(v);
                    ++stats_.forced;
                    changed = true;
                }
            }
        }
        if (!dead) {
            // Most constrained first: both colors are live for every uncolored
            // vertex now, so order by colored-neighbor pressure.
            int pick = -1, best = -1;
            for (int v : verts_) {
                if (color_[v] != Color::None) continue;
                int pressure = cnt3_[v] + cnt4_[v];
                if (pressure > best) {
                    best = pressure;
                    pick = v;
                }
            }
            if (pick < 0) return true;  // everything colored
            ++stats_.nodes;
            for (Color c : {Color::C3, Color::C4}) {
                if (!feasible(pick, c)) continue;
                set(pick, c);
                if (dfs()) return true;
                unset(pick);
            }
        }
        while (!trail.empty()) {
            unset(trail.back());
            trail.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    const std::vector<int>& verts_;
    int b3_, b4_;
    SolveStats& stats_;
    std::vector<Color> color_;
    std::vector<int> cnt3_, cnt4_;
};

// When one class came out empty, move the lowest vertex over; the move is
// always safe because the receiving class is empty.
void fix_empty_class(const std::vector<int>& verts, std::vector<Color>& phi) {
    bool has3 = false, has4 = false;
    for (int v : verts) (phi[v] == Color::C3 ? has3 : has4) = true;
    if (has3 && has4) return;
    phi[verts.front()] = has3 ? Color::C4 : Color::C3;
}

std::vector<int> all_vertices(const SimpleGraph& g) {
    std::vector<int> verts(g.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    return verts;
}

}  // namespace

bool brute_force(const SimpleGraph& g, int d1, int d2) {
    int n = g.vertex_count();
    if (n > 24) throw ContractError("brute_force: more than 24 vertices");
    if (n == 0) return false;
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t cls2 = 0; cls2 <= full; ++cls2) {
        std::uint32_t cls1 = full & ~cls2;
        if (cls1 == 0 || cls2 == 0) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::uint32_t same = adj[v] & ((cls2 >> v) & 1 ? cls2 : cls1);
            int limit = (cls2 >> v) & 1 ? d2 : d1;
            ok = std::popcount(same) <= limit;
        }
        if (ok) return true;
    }
    return false;
}

SolveReport exact_solve(const SimpleGraph& g, int d1, int d2) {
    auto t0 = Clock::now();
    SolveReport report;
    bool swapped = d1 > d2;
    if (swapped) std::swap(d1, d2);

    auto verts = all_vertices(g);
    if (verts.empty()) {
        report.stats.millis = elapsed_ms(t0);
        return report;
    }
    ExactSearch search(g, verts, d1, d2, report.stats);
    auto phi = search.run();
    if (phi && g.vertex_count() >= 2) {
        fix_empty_class(verts, *phi);
        if (swapped)
            for (Color& c : *phi) c = other(c);
        report.feasible = true;
        report.coloring = std::move(*phi);
    }
    report.stats.millis = elapsed_ms(t0);
    return report;
}

namespace {

// Working state of the reduction pipeline. Removed vertices stay as edgeless
// ids, so colorings and traces keep stable indices throughout.
struct Pipeline {
    explicit Pipeline(const SimpleGraph& g, const ReduceOptions& opts)
        : g(g), alive(g.vertex_count(), true), alive_count(g.vertex_count()), opts(opts) {}

    Measure measure() const {
        Measure m;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive[v] && g.degree(v) >= 3) ++m.plus3;
        m.size = alive_count + g.edge_count();
        return m;
    }

    int low_vertex() const {
        int pick = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!alive[v]) continue;
            if (pick < 0 || g.degree(v) < g.degree(pick)) pick = v;
        }
        if (pick < 0 || g.degree(pick) > 3)
            throw ContractError(
                "reduce_solve: no vertex of degree <= 3; input broke the girth/planarity "
                "contract");
        return pick;
    }

    std::optional<std::pair<int, int>> low_edge() const {
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!alive[u] || g.degree(u) > 4) continue;
            for (int v : g.neighbors(u))
                if (u < v && g.degree(v) <= 4) return std::make_pair(u, v);
        }
        return std::nullopt;
    }

    std::optional<int> gadget_vertex() const {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!alive[v] || g.degree(v) != 3) continue;
            bool ok = true;
            for (int w : g.neighbors(v)) ok = ok && g.degree(w) >= 3;
            if (ok) return v;
        }
        return std::nullopt;
    }

    ReductionStep remove_vertex(int v) {
        ReductionStep step;
        step.kind = ReductionKind::VertexRemoval;
        step.removed_vertex = v;
        step.measure_before = measure();
        step.vertex_neighbors = g.detach_vertex(v);
        alive[v] = false;
        --alive_count;
        step.measure_after = measure();
        return step;
    }

    ReductionStep remove_edge(std::pair<int, int> e) {
        ReductionStep step;
        step.kind = ReductionKind::EdgeRemoval;
        step.removed_edge = e;
        step.measure_before = measure();
        g.remove_edge(e.first, e.second);
        step.measure_after = measure();
        return step;
    }

    ReductionStep apply_gadget(int v) {
        ReductionStep step;
        step.kind = ReductionKind::ThreeVertexGadget;
        step.removed_vertex = v;
        step.measure_before = measure();
        auto nbrs = g.detach_vertex(v);
        alive[v] = false;
        --alive_count;
        std::copy(nbrs.begin(), nbrs.end(), step.gadget_neighbors.begin());
        for (int i = 0; i < 3; ++i) {
            int m = g.add_vertex();
            alive.push_back(true);
            ++alive_count;
            step.gadget_midpoints[i] = m;
        }
        for (int i = 0; i < 3; ++i) {
            g.add_edge(step.gadget_midpoints[i], step.gadget_neighbors[i]);
            g.add_edge(step.gadget_midpoints[i], step.gadget_neighbors[(i + 1) % 3]);
        }
        step.measure_after = measure();
        return step;
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) out.push_back(v);
        return out;
    }

    SimpleGraph g;
    std::vector<bool> alive;
    int alive_count;
    ReduceOptions opts;
};

// Rebuilds incremental bookkeeping of the live part of phi on the current graph.
DefectiveColoring coloring_on(const SimpleGraph& g, const std::vector<Color>& phi) {
    DefectiveColoring c(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (phi[v] != Color::None) c.assign(v, phi[v]);
    return c;
}

bool exact_on_alive(Pipeline& p, std::vector<Color>& phi, SolveStats& stats) {
    auto verts = p.alive_vertices();
    if (verts.empty()) return true;
    ExactSearch search(p.g, verts, 3, 4, stats);
    auto sub = search.run();
    if (!sub) return false;
    for (int v : verts) phi[v] = (*sub)[v];
    return true;
}

}  // namespace

SolveReport reduce_solve(const PlanarEmbedding& emb, const ReduceOptions& opts) {
    auto t0 = Clock::now();
    if (auto girth = emb.girth(); girth && *girth < 5)
        throw ContractError("reduce_solve: girth " + std::to_string(*girth) +
                            " is below 5; the constructive solver requires girth >= 5");

    SolveReport report;
    Pipeline p(emb.graph(), opts);

    std::vector<ReductionStep> steps;
    while (p.alive_count > opts.base_threshold) {
        if (opts.strategy == ReductionKind::EdgeRemoval) {
            if (auto e = p.low_edge()) {
                steps.push_back(p.remove_edge(*e));
                continue;
            }
        } else if (opts.strategy == ReductionKind::ThreeVertexGadget) {
            if (auto v = p.gadget_vertex()) {
                steps.push_back(p.apply_gadget(*v));
                continue;
            }
        }
        steps.push_back(p.remove_vertex(p.low_vertex()));
    }

    if (opts.record_trace) {
        report.trace.emplace();
        report.trace->steps = steps;
        report.trace->base_vertices = p.alive_vertices();
        report.trace->base_edges = p.g.edges();
    }

    std::vector<Color> phi(p.g.vertex_count(), Color::None);
    if (!exact_on_alive(p, phi, report.stats)) {
        report.stats.millis = elapsed_ms(t0);
        return report;  // only reachable on contract-breaking inputs
    }

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const ReductionStep& step = *it;
        switch (step.kind) {
            case ReductionKind::VertexRemoval: {
                int v = step.removed_vertex;
                for (int w : step.vertex_neighbors) p.g.add_edge(v, w);
                p.alive[v] = true;
                ++p.alive_count;
                auto coloring = coloring_on(p.g, phi);
                int depth = 0;
                if (extend_vertex(coloring, v, opts.max_depth, &depth)) {
                    ++report.stats.depth_histogram[depth];
                    phi = coloring.assignment();
                } else {
                    ++report.stats.fallbacks;
                    if (!exact_on_alive(p, phi, report.stats))
                        throw InternalError("reduce_solve: exact fallback infeasible");
                }
                break;
            }
            case ReductionKind::EdgeRemoval: {
                auto [x, y] = step.removed_edge;
                auto phi_cnt = [&](int a) {
                    int cnt = 0;
                    for (int w : p.g.neighbors(a))
                        if (phi[w] == phi[a]) ++cnt;
                    return cnt;
                };
                if (phi[x] == Color::C3 && phi[y] == Color::C3) {
                    if (phi_cnt(x) >= 3)
                        phi[x] = Color::C4;
                    else if (phi_cnt(y) >= 3)
                        phi[y] = Color::C4;
                }
                p.g.add_edge(x, y);
                break;
            }
            case ReductionKind::ThreeVertexGadget: {
                int v = step.removed_vertex;
                std::array<Color, 3> mc;
                for (int i = 0; i < 3; ++i) mc[i] = phi[step.gadget_midpoints[i]];
                for (int m : step.gadget_midpoints) {
                    p.g.detach_vertex(m);
                    p.alive[m] = false;
                    --p.alive_count;
                    phi[m] = Color::None;
                }
                p.alive[v] = true;
                ++p.alive_count;
                for (int w : step.gadget_neighbors) p.g.add_edge(v, w);
                phi[v] = mc[0] == mc[1] || mc[0] == mc[2] ? mc[0] : mc[1];
                break;
            }
        }
    }

    // Ghost ids introduced by gadget steps are all dead again here.
    phi.resize(emb.vertex_count());
    if (emb.vertex_count() >= 2) {
        auto verts = all_vertices(emb.graph());
        fix_empty_class(verts, phi);
        auto res = verify(emb.graph(), phi, 3, 4);
        if (!res.valid)
            throw InternalError("reduce_solve: final coloring failed verification");
        report.feasible = true;
        report.coloring = std::move(phi);
    }
    report.stats.millis = elapsed_ms(t0);
    return report;
}

}  // namespace defco
