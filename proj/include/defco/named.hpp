#pragma once

#include <string>

#include "defco/embedding.hpp"

namespace defco {

/// Canonical embeddings of named graph families.
///
/// Accepted names: cycle(n), path(n), star(n), grid(m,n), dodecahedron,
/// subdivided(<name>). Bare "cycle" / "path" / "star" / "grid" take their
/// size from default_n (grid becomes roughly square). Vertex numbering is
/// documented per family in the implementation.
PlanarEmbedding gen_named(const std::string& name, int default_n = 0);

/// Every edge of base subdivided once. Original vertices keep their ids;
/// the midpoint of edge e gets id base.vertex_count() + e.
PlanarEmbedding subdivide_all(const PlanarEmbedding& base);

}  // namespace defco
