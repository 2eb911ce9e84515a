#include "defco/classify.hpp"

namespace defco {

const char* tag_name(VertexTag tag) {
    switch (tag) {
        case VertexTag::TwoVertex: return "two-vertex";
        case VertexTag::Poor: return "poor";
        case VertexTag::SemiPoor: return "semi-poor";
        case VertexTag::Rich: return "rich";
        case VertexTag::UnclassifiedPoor: return "unclassified-poor";
    }
    return "?";
}

VertexClass classify_vertex(const SimpleGraph& g, int v) {
    VertexClass c;
    c.degree = g.degree(v);
    for (int w : g.neighbors(v))
        if (g.degree(w) >= 3) ++c.plus_neighbors;
    if (c.degree == 2)
        c.tag = VertexTag::TwoVertex;
    else if (c.plus_neighbors == 1)
        c.tag = VertexTag::Poor;
    else if (c.plus_neighbors == 2)
        c.tag = VertexTag::SemiPoor;
    else if (c.plus_neighbors >= 3)
        c.tag = VertexTag::Rich;
    else
        c.tag = VertexTag::UnclassifiedPoor;
    return c;
}

std::vector<VertexClass> classify_vertices(const SimpleGraph& g) {
    std::vector<VertexClass> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = classify_vertex(g, v);
    return out;
}

std::vector<int> heavy_edges(const PlanarEmbedding& emb) {
    auto classes = classify_vertices(emb.graph());
    std::vector<int> out;
    for (int e = 0; e < emb.edge_count(); ++e) {
        auto [u, v] = emb.edge(e);
        if (edge_is_heavy(classes[u], classes[v])) out.push_back(e);
    }
    return out;
}

}  // namespace defco
