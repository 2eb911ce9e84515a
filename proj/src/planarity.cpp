#include "defco/planarity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "defco/errors.hpp"

namespace defco {

namespace {

using Edge = std::pair<int, int>;

Edge norm(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Biconnected components as edge lists (bridges come out as single-edge
// blocks). Handles disconnected graphs.
std::vector<std::vector<Edge>> biconnected_components(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    struct Frame {
        int v, parent;
        std::size_t next = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0 || g.degree(root) == 0) continue;
        std::vector<Frame> call;
        call.push_back({root, -1});
        num[root] = low[root] = timer++;
        while (!call.empty()) {
            Frame& fr = call.back();
            if (fr.next < g.neighbors(fr.v).size()) {
                int w = g.neighbors(fr.v)[fr.next++];
                if (num[w] < 0) {
                    stack.push_back(norm(fr.v, w));
                    num[w] = low[w] = timer++;
                    call.push_back({w, fr.v});
                } else if (w != fr.parent && num[w] < num[fr.v]) {
                    stack.push_back(norm(fr.v, w));
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                int v = fr.v, parent = fr.parent;
                call.pop_back();
                if (parent < 0) continue;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= num[parent]) {
                    std::vector<Edge> block;
                    Edge stop = norm(parent, v);
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == stop) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

// One fragment relative to the embedded subgraph: either a chord or a bridge
// component with its attachment vertices.
struct Fragment {
    bool chord = false;
    Edge chord_edge{-1, -1};
    std::vector<int> members;      // interior vertices (component fragments)
    std::vector<int> attachments;  // >= 2 in a biconnected block
};

class BlockEmbedder {
public:
    explicit BlockEmbedder(const std::vector<Edge>& edges) : edges_(edges) {
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    // Local rotations per vertex, or nullopt when the block is non-planar.
    std::optional<std::map<int, std::vector<int>>> run() {
        if (edges_.size() == 1) {
            auto [u, v] = edges_[0];
            return std::map<int, std::vector<int>>{{u, {v}}, {v, {u}}};
        }
        init_cycle();
        while (embedded_count_ < edges_.size()) {
            auto fragments = collect_fragments();
            const Fragment* pick = nullptr;
            int pick_face = -1;
            std::size_t pick_count = 0;
            for (const auto& frag : fragments) {
                int count = 0, last = -1;
                for (std::size_t f = 0; f < faces_.size(); ++f)
                    if (face_admits(faces_[f], frag.attachments)) {
                        ++count;
                        last = static_cast<int>(f);
                    }
                if (count == 0) return std::nullopt;  // non-planar
                if (!pick || static_cast<std::size_t>(count) < pick_count) {
                    pick = &frag;
                    pick_count = count;
                    pick_face = last;
                }
            }
            embed_path(find_path(*pick), pick_face);
        }
        return derive_rotations();
    }

private:
    void init_cycle() {
        // Walk never-revisited vertices until one repeats; the tail is a cycle.
        std::map<int, int> prev;
        int start = adj_.begin()->first;
        int cur = start, from = -1;
        while (!prev.count(cur)) {
            prev[cur] = from;
            int next = -1;
            for (int w : adj_[cur])
                if (w != from) {
                    next = w;
                    break;
                }
            from = cur;
            cur = next;
        }
        std::vector<int> cycle{cur};
        for (int v = from; v != cur; v = prev[v]) cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());

        for (int v : cycle) in_h_.insert(v);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            mark_embedded(cycle[i], cycle[(i + 1) % cycle.size()]);
        faces_.push_back(cycle);
        std::reverse(cycle.begin(), cycle.end());
        faces_.push_back(cycle);
    }

    void mark_embedded(int u, int v) {
        embedded_.insert(norm(u, v));
        ++embedded_count_;
    }

    bool is_embedded(int u, int v) const { return embedded_.count(norm(u, v)) > 0; }

    std::vector<Fragment> collect_fragments() const {
        std::vector<Fragment> out;
        for (auto [u, v] : edges_)
            if (!is_embedded(u, v) && in_h_.count(u) && in_h_.count(v)) {
                Fragment frag;
                frag.chord = true;
                frag.chord_edge = {u, v};
                frag.attachments = {u, v};
                out.push_back(std::move(frag));
            }
        std::set<int> grouped;
        for (const auto& [root, nbrs] : adj_) {
            if (in_h_.count(root) || grouped.count(root)) continue;
            Fragment frag;
            std::set<int> attach;
            std::queue<int> q;
            q.push(root);
            grouped.insert(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                frag.members.push_back(x);
                for (int w : adj_.at(x)) {
                    if (in_h_.count(w))
                        attach.insert(w);
                    else if (grouped.insert(w).second)
                        q.push(w);
                }
            }
            frag.attachments.assign(attach.begin(), attach.end());
            out.push_back(std::move(frag));
        }
        return out;
    }

    static bool face_admits(const std::vector<int>& walk, const std::vector<int>& attachments) {
        return std::all_of(attachments.begin(), attachments.end(), [&](int a) {
            return std::find(walk.begin(), walk.end(), a) != walk.end();
        });
    }

    // A path through the fragment between two distinct attachment vertices.
    std::vector<int> find_path(const Fragment& frag) const {
        if (frag.chord) return {frag.chord_edge.first, frag.chord_edge.second};
        int a = frag.attachments.front();
        std::set<int> interior(frag.members.begin(), frag.members.end());
        std::map<int, int> prev;
        std::queue<int> q;
        for (int w : adj_.at(a))
            if (interior.count(w) && !prev.count(w)) {
                prev[w] = a;
                q.push(w);
            }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : adj_.at(x)) {
                if (w == a || prev.count(w)) continue;
                if (in_h_.count(w)) {
                    std::vector<int> path{w};
                    for (int v = x; v != a; v = prev.at(v)) path.push_back(v);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (interior.count(w)) {
                    prev[w] = x;
                    q.push(w);
                }
            }
        }
        throw InternalError("find_path: fragment has a single attachment");
    }

    void embed_path(const std::vector<int>& path, int face) {
        const std::vector<int> walk = faces_[face];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
            if (walk[i] == a) ia = i;
            if (walk[i] == b) ib = i;
        }
        const int len = static_cast<int>(walk.size());

        // Old face splits in two: new path forward + the b->a arc, and the
        // a->b arc + new path backward. Every old dart lands in exactly one.
        std::vector<int> f1(path.begin(), path.end());
        for (int i = (ib + 1) % len; i != ia; i = (i + 1) % len) f1.push_back(walk[i]);
        std::vector<int> f2;
        for (int i = ia; i != ib; i = (i + 1) % len) f2.push_back(walk[i]);
        f2.push_back(b);
        for (auto it = path.rbegin() + 1; it != path.rend() - 1; ++it) f2.push_back(*it);

        faces_[face] = std::move(f1);
        faces_.push_back(std::move(f2));

        for (std::size_t i = 0; i + 1 < path.size(); ++i) mark_embedded(path[i], path[i + 1]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) in_h_.insert(path[i]);
    }

    std::optional<std::map<int, std::vector<int>>> derive_rotations() const {
        // succ[v][u] = w whenever some walk runs u -> v -> w.
        std::map<int, std::map<int, int>> succ;
        for (const auto& walk : faces_) {
            int len = static_cast<int>(walk.size());
            for (int i = 0; i < len; ++i) {
                int u = walk[i], v = walk[(i + 1) % len], w = walk[(i + 2) % len];
                succ[v][u] = w;
            }
        }
        std::map<int, std::vector<int>> rot;
        for (const auto& [v, around] : succ) {
            std::vector<int> cycle;
            int start = around.begin()->first;
            int cur = start;
            do {
                cycle.push_back(cur);
                cur = around.at(cur);
            } while (cur != start && cycle.size() <= around.size());
            if (cycle.size() != around.size() || cur != start)
                throw InternalError("derive_rotations: face walks are inconsistent");
            rot[v] = std::move(cycle);
        }
        return rot;
    }

    std::vector<Edge> edges_;
    std::map<int, std::vector<int>> adj_;
    std::set<int> in_h_;
    std::set<Edge> embedded_;
    std::size_t embedded_count_ = 0;
    std::vector<std::vector<int>> faces_;
};

bool blocks_planar(const SimpleGraph& g, std::vector<std::map<int, std::vector<int>>>* out) {
    long n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) ++n;
    if (n >= 3 && g.edge_count() > 3 * n - 6 && !out) return false;
    for (const auto& block : biconnected_components(g)) {
        BlockEmbedder embedder(block);
        auto rot = embedder.run();
        if (!rot) return false;
        if (out) out->push_back(std::move(*rot));
    }
    return true;
}

std::vector<Edge> minimal_nonplanar(const SimpleGraph& g) {
    SimpleGraph current = g;
    for (auto [u, v] : g.edges()) {
        SimpleGraph tmp = current;
        tmp.remove_edge(u, v);
        if (!is_planar(tmp)) current = std::move(tmp);
    }
    return current.edges();
}

}  // namespace

EmbedResult embed(const SimpleGraph& g, bool extract_witness, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw ContractError("embed: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the limit of " + std::to_string(max_vertices));
    if (!g.connected()) throw ContractError("embed: input graph is not connected");

    std::vector<std::map<int, std::vector<int>>> block_rotations;
    int n = g.vertex_count();
    if (n >= 3 && g.edge_count() > 3 * n - 6)
        return NonPlanar{extract_witness ? minimal_nonplanar(g) : std::vector<Edge>{}};
    if (!blocks_planar(g, &block_rotations))
        return NonPlanar{extract_witness ? minimal_nonplanar(g) : std::vector<Edge>{}};

    // Rotations of embedded blocks concatenate freely at cut vertices.
    std::vector<std::vector<int>> rot(n);
    for (const auto& block : block_rotations)
        for (const auto& [v, cycle] : block)
            rot[v].insert(rot[v].end(), cycle.begin(), cycle.end());
    return PlanarEmbedding::build(std::move(rot));
}

bool is_planar(const SimpleGraph& g) { return blocks_planar(g, nullptr); }

bool is_kuratowski_subdivision(const std::vector<Edge>& witness) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : witness) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> branch;
    for (const auto& [v, nbrs] : adj) {
        if (nbrs.size() < 2) return false;
        if (nbrs.size() >= 3) branch.push_back(v);
    }

    // Contract the degree-2 chains between branch vertices.
    std::map<int, std::vector<int>> contracted;
    for (int b : branch) {
        for (int first : adj[b]) {
            int prev = b, cur = first;
            while (adj[cur].size() == 2) {
                int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
            }
            if (cur == b) return false;  // chain loops back
            contracted[b].push_back(cur);
        }
    }

    if (branch.size() == 5) {
        for (int b : branch) {
            if (adj[b].size() != 4 || contracted[b].size() != 4) return false;
            std::set<int> targets(contracted[b].begin(), contracted[b].end());
            if (targets.size() != 4 || targets.count(b)) return false;
            for (int t : targets)
                if (std::find(branch.begin(), branch.end(), t) == branch.end()) return false;
        }
        return true;
    }
    if (branch.size() == 6) {
        for (int b : branch)
            if (adj[b].size() != 3 || contracted[b].size() != 3) return false;
        int v0 = branch.front();
        std::set<int> side_a{v0}, side_b(contracted[v0].begin(), contracted[v0].end());
        if (side_b.size() != 3) return false;
        for (int v : branch)
            if (!side_b.count(v) && v != v0) side_a.insert(v);
        if (side_a.size() != 3) return false;
        for (int a : side_a) {
            std::set<int> targets(contracted[a].begin(), contracted[a].end());
            if (targets != side_b) return false;
        }
        return true;
    }
    return false;
}

}  // namespace defco
