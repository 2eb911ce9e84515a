#include "doctest.h"

#include <algorithm>

#include "defco/errors.hpp"
#include "defco/named.hpp"
#include "defco/reduce.hpp"
#include "defco/solve.hpp"

using namespace defco;

namespace {

SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edges(n, edges);
}

SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph::from_edges(n, edges);
}

// 2-vertex 0 whose neighbors 1 (3-saturated color-3 5-vertex) and
// 2 (4-saturated color-4 6-vertex) block both direct colors. With
// blocked = false the support vertices are loose pendants and a single flip
// opens an escape; with blocked = true every flip within radius 2 of the
// target is obstructed by a saturated vertex one step further out, so the
// search must fail at any depth.
std::pair<SimpleGraph, std::vector<Color>> squeezed_two_vertex(bool blocked) {
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}};
    std::vector<Color> phi;
    int next = 3;
    auto attach = [&](int to, int count) {
        std::vector<int> ids;
        for (int i = 0; i < count; ++i) {
            edges.emplace_back(to, next);
            ids.push_back(next++);
        }
        return ids;
    };

    const int a = 1, b = 2;
    int q = attach(a, 1)[0];      // a's color-4 neighbor: blocks a -> 4 when saturated
    auto p = attach(a, 3);        // a's color-3 support (a is 3-saturated)
    int s = attach(b, 1)[0];      // b's color-3 neighbor: blocks b -> 3 when saturated
    auto r = attach(b, 4);        // b's color-4 support (b is 4-saturated)

    std::vector<int> c4_hubs{};   // 4-saturated, color 4
    std::vector<int> c3_hubs{};   // 3-saturated, color 3
    if (blocked) {
        attach(q, 4);                                    // q itself 4-saturated
        for (int v : p) c4_hubs.push_back(attach(v, 1)[0]);  // blocks p_i -> 4
        attach(s, 3);                                    // s itself 3-saturated
        for (int v : r) c3_hubs.push_back(attach(v, 1)[0]);  // blocks r_i -> 3
        for (int hub : c4_hubs) attach(hub, 4);
        for (int hub : c3_hubs) attach(hub, 3);
    }

    auto g = SimpleGraph::from_edges(next, edges);
    phi.assign(next, Color::None);
    phi[a] = Color::C3;
    phi[b] = Color::C4;
    phi[q] = Color::C4;
    for (int v : p) phi[v] = Color::C3;
    phi[s] = Color::C3;
    for (int v : r) phi[v] = Color::C4;
    if (blocked) {
        for (int w : g.neighbors(q))
            if (w != a) phi[w] = Color::C4;
        for (int w : g.neighbors(s))
            if (w != b) phi[w] = Color::C3;
        for (int hub : c4_hubs) {
            phi[hub] = Color::C4;
            for (int w : g.neighbors(hub)) phi[w] = phi[w] == Color::None ? Color::C4 : phi[w];
        }
        for (int hub : c3_hubs) {
            phi[hub] = Color::C3;
            for (int w : g.neighbors(hub)) phi[w] = phi[w] == Color::None ? Color::C3 : phi[w];
        }
    }
    return {g, phi};
}

PlanarEmbedding embedded_k4() {
    return PlanarEmbedding::build({{1, 2, 3}, {3, 2, 0}, {3, 0, 1}, {1, 0, 2}});
}

}  // namespace

TEST_CASE("reduce_edge") {
    SUBCASE("C5 edge removal gives P5") {
        auto [reduced, step] = reduce_edge(cycle(5), {0, 1});
        CHECK(reduced.edge_count() == 4);
        CHECK(reduced.connected());
        CHECK(step.measure_after < step.measure_before);
        CHECK(step.measure_after.plus3 == step.measure_before.plus3);
    }
    SUBCASE("K4 edge removal") {
        auto [reduced, step] = reduce_edge(complete(4), {2, 3});
        CHECK(reduced.edge_count() == 5);
        CHECK(step.measure_after < step.measure_before);
    }
    SUBCASE("degree-5 endpoint violates the precondition") {
        std::vector<std::pair<int, int>> edges{{0, 1}};
        for (int leaf = 2; leaf <= 5; ++leaf) edges.emplace_back(0, leaf);
        auto g = SimpleGraph::from_edges(6, edges);
        CHECK(g.degree(0) == 5);
        CHECK_THROWS_AS(reduce_edge(g, {0, 1}), ContractError);
    }
}

TEST_CASE("extend_edge follows the three endpoint cases") {
    auto g = cycle(5);
    SUBCASE("different endpoint colors: unchanged") {
        std::vector<Color> phi{Color::C3, Color::C4, Color::C3, Color::C4, Color::C4};
        auto lifted = extend_edge(g, phi, {0, 1});
        CHECK(lifted == phi);
    }
    SUBCASE("both color 3, neither saturated: unchanged") {
        std::vector<Color> phi{Color::C3, Color::C3, Color::C4, Color::C4, Color::C4};
        auto lifted = extend_edge(g, phi, {0, 1});
        CHECK(lifted == phi);
    }
    SUBCASE("both color 3 with a saturated endpoint: that endpoint flips to 4") {
        // 0 and 1 adjacent; 0 has three other color-3 neighbors in g - e.
        auto h = SimpleGraph::from_edges(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}});
        std::vector<Color> phi{Color::C3, Color::C3, Color::C3, Color::C3, Color::C3,
                               Color::C4};
        auto lifted = extend_edge(h, phi, {0, 1});
        CHECK(lifted[0] == Color::C4);
        CHECK(lifted[1] == Color::C3);
    }
}

TEST_CASE("reduce_3vertex builds the corner gadget") {
    SUBCASE("dodecahedron vertex: counts, measure, girth") {
        auto emb = gen_named("dodecahedron");
        auto [reduced, step] = reduce_3vertex(emb, 0);
        CHECK(reduced.vertex_count() == 22);
        CHECK(reduced.edge_count() == 33);
        CHECK(step.measure_before.plus3 == 20);
        CHECK(step.measure_after.plus3 == 19);
        CHECK(step.measure_after < step.measure_before);
        CHECK(reduced.girth() == 5);  // gadget preserves the girth floor
    }
    SUBCASE("K4 vertex: applies structurally, no girth claim") {
        auto k4 = embedded_k4();
        auto [reduced, step] = reduce_3vertex(k4, 0);
        CHECK(reduced.vertex_count() == 6);
        CHECK(reduced.edge_count() == 9);
        CHECK(step.measure_after.plus3 < step.measure_before.plus3);
    }
    SUBCASE("non-3-vertex violates the precondition") {
        CHECK_THROWS_AS(reduce_3vertex(gen_named("cycle", 5), 0), ContractError);
    }
    SUBCASE("3-vertex with three 6-neighbors: V+2, E+3, one fewer 3+-vertex") {
        // 0 in the middle; 1, 2, 3 reach degree 6 with five leaves each.
        std::vector<std::vector<int>> rot(19);
        rot[0] = {1, 2, 3};
        int next = 4;
        for (int hub : {1, 2, 3}) {
            rot[hub].push_back(0);
            for (int k = 0; k < 5; ++k) {
                rot[hub].push_back(next);
                rot[next++] = {hub};
            }
        }
        auto emb = PlanarEmbedding::build(std::move(rot));
        auto [reduced, step] = reduce_3vertex(emb, 0);
        CHECK(reduced.vertex_count() == emb.vertex_count() + 2);
        CHECK(reduced.edge_count() == emb.edge_count() + 3);
        CHECK(step.measure_after.plus3 == step.measure_before.plus3 - 1);
    }
}

TEST_CASE("extend_3vertex pigeonholes the midpoints") {
    auto star = gen_named("star", 3);
    auto [gadget, step] = reduce_3vertex(star, 0);
    CHECK(gadget.vertex_count() == 6);
    CHECK(gadget.girth() == 6);  // the gadget of K_{1,3} is a hexagon

    auto gadget_index = [&](int original) { return original - 1; };  // 0 compacted away
    SUBCASE("midpoints (3,3,4) give the removed vertex color 3") {
        std::vector<Color> phi(6, Color::C4);
        phi[gadget_index(step.gadget_midpoints[0])] = Color::C3;
        phi[gadget_index(step.gadget_midpoints[1])] = Color::C3;
        phi[gadget_index(1)] = Color::C4;
        phi[gadget_index(2)] = Color::C3;
        auto lifted = extend_3vertex(star.graph(), phi, step);
        CHECK(lifted[0] == Color::C3);
    }
    SUBCASE("midpoints (4,4,4) give color 4") {
        std::vector<Color> phi(6, Color::C4);
        phi[gadget_index(1)] = Color::C3;
        auto lifted = extend_3vertex(star.graph(), phi, step);
        CHECK(lifted[0] == Color::C4);
    }
    SUBCASE("full round trip through the exact solver") {
        auto emb = gen_named("dodecahedron");
        auto [reduced, gstep] = reduce_3vertex(emb, 7);
        auto report = exact_solve(reduced.graph(), 3, 4);
        REQUIRE(report.feasible);
        auto lifted = extend_3vertex(emb.graph(), report.coloring, gstep);
        CHECK(verify(emb.graph(), lifted, 3, 4).valid);
    }
}

TEST_CASE("find_low_vertex") {
    CHECK(find_low_vertex(cycle(5)) == 0);
    CHECK(find_low_vertex(gen_named("dodecahedron").graph()) == 0);
    CHECK_THROWS_AS(find_low_vertex(complete(5)), ContractError);
}

TEST_CASE("extend_vertex") {
    SUBCASE("direct coloring when a color is free") {
        auto g = cycle(5);
        DefectiveColoring c(g);
        c.assign(1, Color::C3);
        c.assign(2, Color::C4);
        c.assign(3, Color::C4);
        c.assign(4, Color::C3);
        int depth = 0;
        CHECK(extend_vertex(c, 0, 6, &depth));
        CHECK(depth == 1);
        CHECK(c.complete());
    }
    SUBCASE("squeezed 2-vertex: the search flips a saturated neighbor") {
        auto [g, phi] = squeezed_two_vertex(false);
        DefectiveColoring c(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (phi[v] != Color::None) c.assign(v, phi[v]);
        CHECK(!c.can_assign(0, Color::C3));
        CHECK(!c.can_assign(0, Color::C4));
        int depth = 0;
        CHECK(extend_vertex(c, 0, 6, &depth));
        CHECK(depth >= 2);
        CHECK(c.colored(0));
        CHECK(verify(g, c.assignment(), 3, 4).violations.empty());
    }
    SUBCASE("fully blocked neighborhood: Fail") {
        auto [g, phi] = squeezed_two_vertex(true);
        DefectiveColoring c(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (phi[v] != Color::None) c.assign(v, phi[v]);
        CHECK(!extend_vertex(c, 0, 6));
        CHECK(!c.colored(0));
    }
}

TEST_CASE("reductions are stable under relabeling") {
    auto emb = gen_named("dodecahedron");
    // Relabel v -> 19 - v: still the dodecahedron.
    std::vector<std::vector<int>> rot(20);
    for (int v = 0; v < 20; ++v) {
        rot[19 - v] = emb.rotations()[v];
        for (int& w : rot[19 - v]) w = 19 - w;
    }
    auto relabeled = PlanarEmbedding::build(std::move(rot));
    auto [r1, s1] = reduce_3vertex(emb, 3);
    auto [r2, s2] = reduce_3vertex(relabeled, 19 - 3);
    CHECK(r1.vertex_count() == r2.vertex_count());
    CHECK(r1.edge_count() == r2.edge_count());
    CHECK(r1.girth() == r2.girth());
    CHECK(s1.measure_after.plus3 == s2.measure_after.plus3);
    std::vector<int> deg1, deg2;
    for (int v = 0; v < r1.vertex_count(); ++v) deg1.push_back(r1.degree(v));
    for (int v = 0; v < r2.vertex_count(); ++v) deg2.push_back(r2.degree(v));
    std::sort(deg1.begin(), deg1.end());
    std::sort(deg2.begin(), deg2.end());
    CHECK(deg1 == deg2);
}
