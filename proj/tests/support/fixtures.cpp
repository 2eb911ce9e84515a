#include "support/fixtures.hpp"

namespace defco::fixtures {

PlanarEmbedding ring_with_trees(const std::vector<RingVertexSpec>& specs) {
    const int k = static_cast<int>(specs.size());
    std::vector<std::vector<int>> rot(k);
    auto add = [&rot]() {
        rot.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    };
    for (int i = 0; i < k; ++i) {
        rot[i].push_back((i + k - 1) % k);
        rot[i].push_back((i + 1) % k);
        const auto& spec = specs[i];
        for (int a = 0; a < spec.leaves; ++a) {
            int leaf = add();
            rot[i].push_back(leaf);
            rot[leaf] = {i};
        }
        for (int a = 0; a < spec.twopaths; ++a) {
            int mid = add(), end = add();
            rot[i].push_back(mid);
            rot[mid] = {i, end};
            rot[end] = {mid};
        }
        for (int a = 0; a < spec.deeps; ++a) {
            int root = add(), l1 = add(), l2 = add();
            rot[i].push_back(root);
            rot[root] = {i, l1, l2};
            rot[l1] = {root};
            rot[l2] = {root};
        }
    }
    return PlanarEmbedding::build(std::move(rot));
}

PlanarEmbedding bowtie_pentagons() {
    // 0 = cut vertex, 1-4 first pentagon, 5-8 second, then deep(9,10,11)
    // and leaf(12).
    std::vector<std::vector<int>> rot(13);
    rot[0] = {4, 1, 8, 5, 9, 12};
    rot[1] = {0, 2};
    rot[2] = {1, 3};
    rot[3] = {2, 4};
    rot[4] = {3, 0};
    rot[5] = {0, 6};
    rot[6] = {5, 7};
    rot[7] = {6, 8};
    rot[8] = {7, 0};
    rot[9] = {0, 10, 11};
    rot[10] = {9};
    rot[11] = {9};
    rot[12] = {0};
    return PlanarEmbedding::build(std::move(rot));
}

}  // namespace defco::fixtures
