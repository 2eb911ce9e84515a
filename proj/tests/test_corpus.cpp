#include "doctest.h"

#include <random>
#include <set>

#include "defco/census.hpp"
#include "defco/errors.hpp"
#include "defco/graph6.hpp"
#include "defco/jsonio.hpp"
#include "defco/named.hpp"
#include "defco/planarity.hpp"
#include "defco/random_gen.hpp"

using namespace defco;

namespace {

SimpleGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return SimpleGraph::from_edges(10, edges);
}

SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph::from_edges(n, edges);
}

SimpleGraph complete_bipartite_33() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
    return SimpleGraph::from_edges(6, edges);
}

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() % 1000) / 1000.0 < p) edges.emplace_back(i, j);
    return SimpleGraph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("named families") {
    CHECK(gen_named("cycle(5)").girth() == 5);
    CHECK(gen_named("grid(3,3)").vertex_count() == 9);
    CHECK(gen_named("grid(3,3)").girth() == 4);
    CHECK_THROWS_AS(gen_named("moebius"), ContractError);

    auto sub = gen_named("subdivided(dodecahedron)");
    CHECK(sub.vertex_count() == 50);
    CHECK(sub.edge_count() == 60);
    CHECK(sub.girth() == 10);
    for (int v = 0; v < 20; ++v) CHECK(sub.degree(v) == 3);
    for (int v = 20; v < 50; ++v) CHECK(sub.degree(v) == 2);
}

TEST_CASE("gen_random: determinism and the girth floor") {
    auto a = gen_random(20, 1);
    auto b = gen_random(20, 1);
    CHECK(a.rotations() == b.rotations());
    CHECK(gen_random(20, 2).rotations() != a.rotations());

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 5 + static_cast<int>(seed) * 9;
        auto emb = gen_random(n, seed);
        auto girth = emb.girth();
        CHECK((!girth || *girth >= 5));
        CHECK(emb.vertex_count() - emb.edge_count() + emb.face_count() == 2);
    }
}

TEST_CASE("embed") {
    SUBCASE("C5 edge list gets two faces") {
        auto result = embed(gen_named("cycle", 5).graph());
        auto& emb = std::get<PlanarEmbedding>(result);
        CHECK(emb.face_count() == 2);
    }
    SUBCASE("dodecahedron edge list recovers 12 pentagonal faces") {
        auto result = embed(gen_named("dodecahedron").graph());
        auto& emb = std::get<PlanarEmbedding>(result);
        REQUIRE(emb.face_count() == 12);
        for (const auto& f : emb.faces()) CHECK(f.degree() == 5);
    }
    SUBCASE("trees and cut vertices") {
        auto result = embed(gen_named("star", 6).graph());
        CHECK(std::get<PlanarEmbedding>(result).face_count() == 1);
    }
    SUBCASE("K5, K33, Petersen, and subdivisions are non-planar with witnesses") {
        for (const SimpleGraph& g : {complete(5), complete_bipartite_33(), petersen()}) {
            auto result = embed(g, /*extract_witness=*/true);
            REQUIRE(std::holds_alternative<NonPlanar>(result));
            auto witness = std::get<NonPlanar>(result).witness;
            CHECK(is_kuratowski_subdivision(witness));
        }
        // subdivide K5 once and re-test
        auto k5 = complete(5);
        auto edges = k5.edges();
        SimpleGraph sub(5 + static_cast<int>(edges.size()));
        int next = 5;
        for (auto [u, v] : edges) {
            sub.add_edge(u, next);
            sub.add_edge(next, v);
            ++next;
        }
        auto result = embed(sub, true);
        REQUIRE(std::holds_alternative<NonPlanar>(result));
        CHECK(is_kuratowski_subdivision(std::get<NonPlanar>(result).witness));
    }
    SUBCASE("planar embeddings validate and non-planarity matches the edge bound") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 30; ++trial) {
            auto g = random_graph(8, 0.4, rng);
            if (!g.connected()) continue;
            auto result = embed(g);
            if (std::holds_alternative<PlanarEmbedding>(result)) {
                const auto& emb = std::get<PlanarEmbedding>(result);
                CHECK(emb.vertex_count() - emb.edge_count() + emb.face_count() == 2);
                CHECK(emb.edges() == g.edges());
            } else {
                CHECK(!is_planar(g));
            }
        }
    }
    SUBCASE("size limit") {
        CHECK_THROWS_AS(embed(SimpleGraph(513)), ContractError);
    }
}

TEST_CASE("graph6 codec") {
    SUBCASE("reference encodings") {
        CHECK(write_graph6(gen_named("cycle", 5).graph()) == "Dhc");
        CHECK(write_graph6(gen_named("dodecahedron").graph()) ==
              "SheA@?OA?K?W?W?K?a??O?@C?AG?AG?@c");
        CHECK(parse_graph6("Dhc").edge_count() == 5);
        CHECK(parse_graph6(">>graph6<<Dhc\n").edge_count() == 5);
        CHECK(parse_graph6("SheA@?OA?K?W?W?K?a??O?@C?AG?AG?@c").edge_count() == 30);
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_graph6(""), ContractError);
        CHECK_THROWS_AS(parse_graph6("D"), ContractError);        // truncated bits
        CHECK_THROWS_AS(parse_graph6("Dhc\x01"), ContractError);  // byte out of range
        CHECK_THROWS_AS(parse_graph6("~~????"), ContractError);   // 8-byte header
    }
    SUBCASE("round trips, including the long form") {
        std::mt19937_64 rng(123);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 1 + static_cast<int>(rng() % 80);  // crosses the 62-vertex boundary
            auto g = random_graph(n, 0.2, rng);
            auto back = parse_graph6(write_graph6(g));
            REQUIRE(back.vertex_count() == g.vertex_count());
            REQUIRE(back.edges() == g.edges());
        }
    }
}

TEST_CASE("embedding JSON round trips") {
    for (const char* family : {"cycle(5)", "star(3)", "dodecahedron"}) {
        auto emb = gen_named(family);
        auto back = embedding_from_json(embedding_to_json(emb));
        CHECK(back.rotations() == emb.rotations());
    }
    for (std::uint64_t seed : {4ull, 5ull}) {
        auto emb = gen_random(30, seed);
        auto doc = embedding_to_json(emb);
        auto back = embedding_from_json(nlohmann::json::parse(doc.dump()));
        CHECK(back.rotations() == emb.rotations());
    }
    CHECK_THROWS_AS(embedding_from_json(nlohmann::json::parse("{\"n\": 2}")), ContractError);
}

TEST_CASE("canonical codes identify isomorphs") {
    auto p3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
    auto p3b = SimpleGraph::from_edges(3, {{0, 2}, {1, 2}});
    auto k3 = complete(3);
    CHECK(canonical_code(p3) == canonical_code(p3b));
    CHECK(canonical_code(p3) != canonical_code(k3));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(7, 0.4, rng);
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h(7);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("connected census counts match the published values") {
    auto all = connected_census(7, /*planar_only=*/false);
    const long expected_all[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(static_cast<long>(all[n].size()) == expected_all[n]);

    auto planar = connected_census(7, /*planar_only=*/true);
    const long expected_planar[] = {0, 1, 1, 2, 6, 20, 99, 646};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<long>(planar[n].size()) == expected_planar[n]);
}
