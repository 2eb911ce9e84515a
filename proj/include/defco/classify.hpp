#pragma once

#include <vector>

#include "defco/embedding.hpp"
#include "defco/graph.hpp"

namespace defco {

/// Degree-based vertex taxonomy. A poor / semi-poor / rich vertex has exactly
/// one / exactly two / at least three neighbors of degree >= 3. Degree-2
/// vertices form their own class. A 4+-vertex with no 3+-neighbor at all gets
/// the extension tag UnclassifiedPoor; discharging recipients treat it as
/// poor and the audit flags every such payment.
enum class VertexTag { TwoVertex, Poor, SemiPoor, Rich, UnclassifiedPoor };

struct VertexClass {
    int degree = 0;
    int plus_neighbors = 0;  // neighbors of degree >= 3
    VertexTag tag = VertexTag::UnclassifiedPoor;
};

const char* tag_name(VertexTag tag);

VertexClass classify_vertex(const SimpleGraph& g, int v);
inline VertexClass classify_vertex(const PlanarEmbedding& emb, int v) {
    return classify_vertex(emb.graph(), v);
}

std::vector<VertexClass> classify_vertices(const SimpleGraph& g);
inline std::vector<VertexClass> classify_vertices(const PlanarEmbedding& emb) {
    return classify_vertices(emb.graph());
}

/// Poor-of-degree-d test used by discharging recipients and face templates;
/// UnclassifiedPoor counts as poor here.
inline bool is_poor_of(const VertexClass& c, int d) {
    return c.degree == d && c.plus_neighbors <= 1;
}
inline bool is_semipoor_of(const VertexClass& c, int d) {
    return c.degree == d && c.plus_neighbors == 2;
}

/// 5p-, 5s-, or 6p-vertices: the classes that collect charge and that
/// disqualify an endpoint from making an edge heavy.
inline bool is_charge_recipient(const VertexClass& c) {
    return is_poor_of(c, 5) || is_semipoor_of(c, 5) || is_poor_of(c, 6);
}

/// A heavy edge joins two 5+-vertices, neither of which is 5p, 5s, or 6p.
inline bool edge_is_heavy(const VertexClass& cu, const VertexClass& cv) {
    return cu.degree >= 5 && cv.degree >= 5 && !is_charge_recipient(cu) &&
           !is_charge_recipient(cv);
}

/// Ids of the heavy edges of the embedding.
std::vector<int> heavy_edges(const PlanarEmbedding& emb);

}  // namespace defco
