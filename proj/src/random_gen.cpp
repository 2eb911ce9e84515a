#include "defco/random_gen.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "defco/errors.hpp"

namespace defco {

namespace {

// Mutable rotation system under construction. Dead ids (from smoothing) are
// compacted away at the end.
struct Workbench {
    std::vector<std::vector<int>> rot;
    std::vector<bool> alive;
    std::mt19937_64 rng;

    explicit Workbench(std::uint64_t seed) : rng(seed) {}

    // Bounded uniform pick; plain modulo keeps results identical across
    // standard library implementations.
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

    int add_vertex() {
        rot.emplace_back();
        alive.push_back(true);
        return static_cast<int>(rot.size()) - 1;
    }

    void insert_after(int v, int anchor, int w) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), anchor);
        r.insert(it + 1, w);
    }

    bool adjacent(int u, int v) const {
        return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
    }

    SimpleGraph graph() const {
        SimpleGraph g(static_cast<int>(rot.size()));
        for (int v = 0; v < static_cast<int>(rot.size()); ++v)
            for (int w : rot[v])
                if (v < w) g.add_edge(v, w);
        return g;
    }

    // Recomputed girth floor: girth >= 5 iff no vertex sees another vertex
    // twice within distance 2 (no triangles, no 4-cycles). Stamps are tagged
    // by the round, so no reset pass is needed.
    bool girth_at_least_5() const {
        int n = static_cast<int>(rot.size());
        std::vector<int> stamp(n, -1);
        for (int v = 0; v < n; ++v) {
            for (int u : rot[v]) stamp[u] = v;
            for (int u : rot[v])
                for (int x : rot[u]) {
                    if (x == v) continue;
                    if (stamp[x] == v) return false;
                    stamp[x] = v;
                }
        }
        return true;
    }

    int alive_count() const {
        return static_cast<int>(std::count(alive.begin(), alive.end(), true));
    }
};

// Faces stay triangles throughout the growth phase; (a,b,c) is the directed
// walk a -> b -> c.
void grow_triangulation(Workbench& wb, int target_vertices) {
    wb.add_vertex();
    wb.add_vertex();
    wb.add_vertex();
    wb.rot[0] = {1, 2};
    wb.rot[1] = {2, 0};
    wb.rot[2] = {0, 1};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {1, 0, 2}};

    while (static_cast<int>(wb.rot.size()) < target_vertices) {
        auto [a, b, c] = faces[wb.pick(faces.size())];
        int w = wb.add_vertex();
        wb.insert_after(a, c, w);
        wb.insert_after(b, a, w);
        wb.insert_after(c, b, w);
        wb.rot[w] = {a, c, b};
        faces.push_back({a, b, w});
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
        // The face (a,b,c) is gone; keep the list compact.
        for (auto& f : faces)
            if (f == std::array<int, 3>{a, b, c}) {
                f = faces.back();
                faces.pop_back();
                break;
            }
    }
}

void subdivide_edge(Workbench& wb, int u, int v) {
    int m = wb.add_vertex();
    *std::find(wb.rot[u].begin(), wb.rot[u].end(), v) = m;
    *std::find(wb.rot[v].begin(), wb.rot[v].end(), u) = m;
    wb.rot[m] = {u, v};
}

void subdivide_everything(Workbench& wb) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(wb.rot.size()); ++v)
        for (int w : wb.rot[v])
            if (v < w) edges.emplace_back(v, w);
    for (auto [u, v] : edges) subdivide_edge(wb, u, v);
}

// Replace u - m - w by u - w when that keeps the graph simple and the girth
// at or above 5.
bool try_smooth(Workbench& wb, int m) {
    if (!wb.alive[m] || wb.rot[m].size() != 2) return false;
    int u = wb.rot[m][0], w = wb.rot[m][1];
    if (u == w || wb.adjacent(u, w)) return false;
    auto slot_u = std::find(wb.rot[u].begin(), wb.rot[u].end(), m);
    auto slot_w = std::find(wb.rot[w].begin(), wb.rot[w].end(), m);
    *slot_u = w;
    *slot_w = u;
    wb.alive[m] = false;
    auto saved = wb.rot[m];
    wb.rot[m].clear();
    if (!wb.girth_at_least_5()) {
        *std::find(wb.rot[u].begin(), wb.rot[u].end(), w) = m;
        *std::find(wb.rot[w].begin(), wb.rot[w].end(), u) = m;
        wb.alive[m] = true;
        wb.rot[m] = saved;
        return false;
    }
    return true;
}

std::vector<std::pair<int, int>> live_edges(const Workbench& wb) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(wb.rot.size()); ++v)
        for (int w : wb.rot[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::vector<int> live_two_vertices(const Workbench& wb) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(wb.rot.size()); ++v)
        if (wb.alive[v] && wb.rot[v].size() == 2) out.push_back(v);
    return out;
}

}  // namespace

PlanarEmbedding gen_random(int n, std::uint64_t seed) {
    if (n < 5) throw ContractError("gen_random: n must be at least 5");
    Workbench wb(seed);

    int t = std::max(3, (n + 6) / 4);
    grow_triangulation(wb, t);
    subdivide_everything(wb);

    int moves = n / 2 + 4;
    for (int i = 0; i < moves; ++i) {
        int count = wb.alive_count();
        int kind;
        if (count > n + 2)
            kind = 0;
        else if (count < n - 2)
            kind = 1 + static_cast<int>(wb.pick(2));
        else
            kind = static_cast<int>(wb.pick(3));
        switch (kind) {
            case 0: {  // smoothing
                auto twos = live_two_vertices(wb);
                if (!twos.empty()) try_smooth(wb, twos[wb.pick(twos.size())]);
                break;
            }
            case 1: {  // pendant attachment
                int v;
                do {
                    v = static_cast<int>(wb.pick(wb.rot.size()));
                } while (!wb.alive[v] || wb.rot[v].empty());
                int p = wb.add_vertex();
                std::size_t slot = wb.pick(wb.rot[v].size());
                wb.rot[v].insert(wb.rot[v].begin() + slot, p);
                wb.rot[p] = {v};
                break;
            }
            default: {  // 2-vertex insertion
                auto edges = live_edges(wb);
                auto [u, w] = edges[wb.pick(edges.size())];
                subdivide_edge(wb, u, w);
                break;
            }
        }
        if (!wb.girth_at_least_5())
            throw InternalError("gen_random: a local move broke the girth floor");
    }

    std::vector<int> remap(wb.rot.size(), -1);
    int next = 0;
    for (int v = 0; v < static_cast<int>(wb.rot.size()); ++v)
        if (wb.alive[v]) remap[v] = next++;
    std::vector<std::vector<int>> rot(next);
    for (int v = 0; v < static_cast<int>(wb.rot.size()); ++v) {
        if (!wb.alive[v]) continue;
        rot[remap[v]] = wb.rot[v];
        for (int& w : rot[remap[v]]) w = remap[w];
    }
    auto emb = PlanarEmbedding::build(std::move(rot));
    if (auto girth = emb.girth(); girth && *girth < 5)
        throw InternalError("gen_random: output girth below 5");
    return emb;
}

}  // namespace defco
