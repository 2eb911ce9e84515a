#include "defco/census.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "defco/errors.hpp"
#include "defco/planarity.hpp"

namespace defco {

namespace {

using Partition = std::vector<std::vector<int>>;

struct Canonizer {
    int n;
    std::vector<std::uint32_t> adj;
    std::uint64_t best = ~0ull;

    std::uint64_t encode(const std::vector<int>& perm) const {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (adj[perm[i]] >> perm[j] & 1) code |= 1ull << bit;
        return code;
    }

    // Split cells by neighbor counts against every cell until stable.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < p.size() && !changed; ++si) {
                std::uint32_t mask = 0;
                for (int v : p[si]) mask |= 1u << v;
                for (std::size_t ti = 0; ti < p.size() && !changed; ++ti) {
                    if (p[ti].size() <= 1) continue;
                    auto count = [&](int v) { return std::popcount(adj[v] & mask); };
                    int first = count(p[ti][0]);
                    bool uniform = std::all_of(p[ti].begin(), p[ti].end(),
                                               [&](int v) { return count(v) == first; });
                    if (uniform) continue;
                    std::vector<int> cell = p[ti];
                    std::stable_sort(cell.begin(), cell.end(),
                                     [&](int a, int b) { return count(a) < count(b); });
                    Partition replacement;
                    for (int v : cell) {
                        if (replacement.empty() || count(replacement.back().front()) != count(v))
                            replacement.push_back({v});
                        else
                            replacement.back().push_back(v);
                    }
                    p.erase(p.begin() + ti);
                    p.insert(p.begin() + ti, replacement.begin(), replacement.end());
                    changed = true;
                }
            }
        }
    }

    void search(Partition p) {
        refine(p);
        std::size_t split = p.size();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) {
                split = i;
                break;
            }
        if (split == p.size()) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = p[i][0];
            best = std::min(best, encode(perm));
            return;
        }
        for (int v : p[split]) {
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i != split) {
                    child.push_back(p[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : p[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 9) throw ContractError("canonical_code: supports at most 9 vertices");
    if (n == 0) return 0;
    Canonizer canon;
    canon.n = n;
    canon.adj.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) canon.adj[v] |= 1u << w;

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    Partition initial;
    for (int v : order) {
        if (!initial.empty() && g.degree(initial.back().front()) == g.degree(v))
            initial.back().push_back(v);
        else
            initial.push_back({v});
    }
    canon.search(std::move(initial));
    return canon.best;
}

std::vector<std::vector<SimpleGraph>> connected_census(int max_n, bool planar_only) {
    if (max_n > 9) throw ContractError("connected_census: supports at most 9 vertices");
    std::vector<std::vector<SimpleGraph>> levels(max_n + 1);
    if (max_n < 1) return levels;
    levels[1].push_back(SimpleGraph(1));

    for (int k = 1; k < max_n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        for (const SimpleGraph& base : levels[k]) {
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                int new_edges = std::popcount(mask);
                if (planar_only && k + 1 >= 3 &&
                    base.edge_count() + new_edges > 3 * (k + 1) - 6)
                    continue;
                SimpleGraph h = base;
                h.add_vertex();
                for (int w = 0; w < k; ++w)
                    if (mask >> w & 1) h.add_edge(k, w);
                if (!seen.insert(canonical_code(h)).second) continue;
                if (planar_only && !is_planar(h)) continue;
                levels[k + 1].push_back(std::move(h));
            }
        }
    }
    return levels;
}

}  // namespace defco
