#include "defco/embedding.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace defco {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

int PlanarEmbedding::slot_of(int v, int neighbor) const {
    const auto& r = rot_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == neighbor) return i;
    throw InternalError("slot_of: " + std::to_string(neighbor) + " not around " +
                        std::to_string(v));
}

PlanarEmbedding PlanarEmbedding::build(std::vector<std::vector<int>> rotations) {
    PlanarEmbedding emb;
    emb.n_ = static_cast<int>(rotations.size());
    if (emb.n_ == 0) throw ContractError("build_embedding: empty vertex set");
    const int n = emb.n_;

    for (int v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        for (int w : rotations[v]) {
            if (w < 0 || w >= n)
                throw ContractError("build_embedding: vertex " + std::to_string(v) +
                                    " references out-of-range neighbor " + std::to_string(w));
            if (w == v)
                throw EmbeddingError(EmbeddingError::Kind::NotSimple,
                                     "self-loop at vertex " + std::to_string(v), v);
            if (seen[w])
                throw EmbeddingError(EmbeddingError::Kind::NotSimple,
                                     "repeated neighbor " + std::to_string(w) +
                                         " in rotation of " + std::to_string(v),
                                     v, {v, w});
            seen[w] = true;
        }
    }

    for (int v = 0; v < n; ++v)
        for (int w : rotations[v])
            if (std::find(rotations[w].begin(), rotations[w].end(), v) == rotations[w].end())
                throw EmbeddingError(EmbeddingError::Kind::NotSymmetric,
                                     "edge " + edge_str(v, w) + " missing from rotation of " +
                                         std::to_string(w),
                                     w, {v, w});

    emb.rot_ = std::move(rotations);

    emb.dart_start_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        emb.dart_start_[v + 1] = emb.dart_start_[v] + static_cast<int>(emb.rot_[v].size());
    const int darts = emb.dart_start_[n];

    {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[0] = 0;
        q.push(0);
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : emb.rot_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != n) {
            int missing = 0;
            while (dist[missing] >= 0) ++missing;
            throw EmbeddingError(EmbeddingError::Kind::NotConnected,
                                 "vertex " + std::to_string(missing) +
                                     " unreachable from vertex 0",
                                 missing);
        }
    }

    for (int u = 0; u < n; ++u)
        for (int v : emb.rot_[u])
            if (u < v) emb.edges_.emplace_back(u, v);
    std::sort(emb.edges_.begin(), emb.edges_.end());

    // Trace face walks: each dart belongs to exactly one walk.
    emb.face_of_dart_.assign(darts, -1);
    for (int v = 0; v < n; ++v) {
        for (int slot = 0; slot < emb.degree(v); ++slot) {
            if (emb.face_of_dart_[emb.dart_id(v, slot)] >= 0) continue;
            int fid = emb.face_count();
            Face face;
            int cu = v, cslot = slot;
            do {
                emb.face_of_dart_[emb.dart_id(cu, cslot)] = fid;
                face.walk.push_back(cu);
                int cv = emb.rot_[cu][cslot];
                int back = emb.slot_of(cv, cu);
                cu = cv;
                cslot = (back + 1) % emb.degree(cv);
            } while (!(cu == v && cslot == slot));
            emb.faces_.push_back(std::move(face));
        }
    }
    if (darts == 0) emb.faces_.push_back(Face{});  // isolated vertex: one face

    int euler = n - emb.edge_count() + emb.face_count();
    if (euler != 2)
        throw EmbeddingError(EmbeddingError::Kind::EulerViolation,
                             "V - E + F = " + std::to_string(euler) +
                                 ", expected 2 (non-planar rotation system or genus > 0)");

    emb.graph_ = SimpleGraph::from_edges(n, emb.edges_);
    return emb;
}

int PlanarEmbedding::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        throw ContractError("edge_id: no edge " + edge_str(u, v));
    return static_cast<int>(it - edges_.begin());
}

std::pair<int, int> PlanarEmbedding::faces_of_edge(int e) const {
    auto [u, v] = edges_[e];
    int su = slot_of(u, v);
    int sv = slot_of(v, u);
    return {face_of_dart_[dart_id(u, su)], face_of_dart_[dart_id(v, sv)]};
}

}  // namespace defco
