#pragma once

#include <cstdint>

#include "defco/embedding.hpp"

namespace defco {

/// Random connected planar embedding with girth >= 5 and roughly n vertices,
/// deterministic per seed.
///
/// Construction: grow a random planar triangulation by inserting vertices
/// into faces, subdivide every edge once (girth >= 6), then apply random
/// girth-preserving local moves -- 2-vertex smoothing, pendant attachment,
/// edge subdivision -- with the girth recomputed after every move and the
/// move reverted if it dips below 5.
PlanarEmbedding gen_random(int n, std::uint64_t seed);

}  // namespace defco
