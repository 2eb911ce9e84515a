#include "doctest.h"

#include <random>

#include "defco/coloring.hpp"
#include "defco/errors.hpp"
#include "defco/graph.hpp"
#include "defco/named.hpp"

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

}  // namespace

TEST_CASE("verify on C5") {
    auto g = cycle(5);
    SUBCASE("one vertex in class 3, rest in class 4 is (3,4)-valid") {
        std::vector<Color> phi(5, Color::C4);
        phi[0] = Color::C3;
        auto res = verify(g, phi, 3, 4);
        CHECK(res.valid);
    }
    SUBCASE("a single class fails on nonemptiness") {
        std::vector<Color> phi(5, Color::C4);
        auto res = verify(g, phi, 3, 4);
        CHECK(!res.valid);
        CHECK(res.empty_class);
        CHECK(res.violations.empty());
    }
    SUBCASE("incomplete colorings are rejected") {
        std::vector<Color> phi(5, Color::None);
        CHECK_THROWS_AS(verify(g, phi, 3, 4), ContractError);
    }
}

TEST_CASE("verify on K4 at (1,1): pair splits and only pair splits") {
    auto g = complete(4);
    // All 16 assignments, checked against an independent recount: the six
    // 2+2 splits are exactly the valid ones.
    int valid_count = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Color> phi(4);
        int ones = 0;
        for (int v = 0; v < 4; ++v) {
            bool hi = mask >> v & 1;
            ones += hi;
            phi[v] = hi ? Color::C4 : Color::C3;
        }
        if (verify(g, phi, 1, 1).valid) {
            ++valid_count;
            CHECK(ones == 2);
        }
    }
    CHECK(valid_count == 6);
}

TEST_CASE("verify is monotone in the bounds") {
    std::mt19937_64 rng(11);
    auto g = cycle(7);
    g.add_edge(0, 3);
    g.add_edge(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Color> phi(7);
        for (auto& c : phi) c = rng() % 2 ? Color::C3 : Color::C4;
        int d1 = static_cast<int>(rng() % 3), d2 = static_cast<int>(rng() % 4);
        if (verify(g, phi, d1, d2).valid) {
            CHECK(verify(g, phi, d1 + 1, d2).valid);
            CHECK(verify(g, phi, d1, d2 + 2).valid);
        }
    }
}

TEST_CASE("saturation") {
    auto g = SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    DefectiveColoring c(g);
    c.assign(0, Color::C3);
    c.assign(1, Color::C3);
    c.assign(2, Color::C3);
    CHECK(!c.is_saturated(0));  // two same-colored neighbors
    c.assign(3, Color::C3);
    CHECK(c.is_saturated(0));  // three
    CHECK_THROWS_AS(c.is_saturated(4), ContractError);

    DefectiveColoring c4(g);
    c4.assign(0, Color::C4);
    for (int v : {1, 2, 3, 4}) c4.assign(v, Color::C4);
    CHECK(c4.is_saturated(0));
}

TEST_CASE("safe_flip") {
    SUBCASE("flipping away from a color never hurts the old class") {
        // 0 colored 3, all neighbors colored 3 -> flip to 4 is free.
        auto g = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        DefectiveColoring c(g);
        for (int v = 0; v < 4; ++v) c.assign(v, Color::C3);
        CHECK(c.is_saturated(0));
        auto out = c.safe_flip(0);
        CHECK(out.flipped);
        CHECK(c.color(0) == Color::C4);
        CHECK(c.same_color_count(0) == 0);
        CHECK(!c.is_saturated(1));
    }
    SUBCASE("blocked by a saturated neighbor of the new color") {
        // star fixture: 1 is color-4 and 4-saturated; flipping 0 (color 3)
        // to 4 would push it over.
        std::vector<std::pair<int, int>> edges{{0, 1}};
        for (int leaf = 2; leaf <= 5; ++leaf) edges.emplace_back(1, leaf);
        auto g = SimpleGraph::from_edges(6, edges);
        DefectiveColoring c(g);
        c.assign(1, Color::C4);
        for (int leaf = 2; leaf <= 5; ++leaf) c.assign(leaf, Color::C4);
        c.assign(0, Color::C3);
        CHECK(c.is_saturated(1));
        auto out = c.safe_flip(0);
        CHECK(!out.flipped);
        CHECK(out.blocker == 1);
        CHECK(c.color(0) == Color::C3);
    }
}

TEST_CASE("bookkeeping equals a direct recount under random operations") {
    std::mt19937_64 rng(5);
    auto g = cycle(9);
    g.add_edge(0, 4);
    g.add_edge(2, 7);
    g.add_edge(1, 5);
    DefectiveColoring c(g);
    for (int step = 0; step < 4000; ++step) {
        int v = static_cast<int>(rng() % 9);
        switch (rng() % 3) {
            case 0:
                if (!c.colored(v)) c.assign(v, rng() % 2 ? Color::C3 : Color::C4);
                break;
            case 1:
                if (c.colored(v)) c.unassign(v);
                break;
            default:
                if (c.colored(v)) c.safe_flip(v);
        }
        for (int u = 0; u < 9; ++u) {
            if (!c.colored(u)) continue;
            int recount = 0;
            for (int w : g.neighbors(u))
                if (c.color(w) == c.color(u)) ++recount;
            REQUIRE(c.same_color_count(u) == recount);
        }
    }
}

TEST_CASE("safe_flip preserves validity") {
    std::mt19937_64 rng(17);
    auto g = cycle(8);
    g.add_edge(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        DefectiveColoring c(g);
        for (int v = 0; v < 8; ++v) {
            Color pick = rng() % 2 ? Color::C3 : Color::C4;
            if (c.can_assign(v, pick))
                c.assign(v, pick);
            else
                c.assign(v, other(pick));
        }
        REQUIRE(verify(g, c.assignment(), 3, 4).violations.empty());
        for (int k = 0; k < 10; ++k) {
            c.safe_flip(static_cast<int>(rng() % 8));
            REQUIRE(verify(g, c.assignment(), 3, 4).violations.empty());
        }
    }
}

TEST_CASE("recoloring_search finds immediate colorings at depth 1") {
    auto g = cycle(5);
    DefectiveColoring c(g);
    c.assign(1, Color::C3);
    c.assign(4, Color::C4);
    auto plan = recoloring_search(c, 0, 6);
    REQUIRE(plan.has_value());
    CHECK(plan->depth() == 1);
    CHECK(plan->moves.back().vertex == 0);
}

TEST_CASE("recoloring_search plans replay validly") {
    // Target 0's neighbors block both direct colors; the plan must unlock
    // one of them and stay valid after every prefix.
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}};
    int next = 3;
    for (int leaf = 0; leaf < 3; ++leaf) edges.emplace_back(1, next++);
    for (int leaf = 0; leaf < 4; ++leaf) edges.emplace_back(2, next++);
    auto g = SimpleGraph::from_edges(next, edges);
    DefectiveColoring c(g);
    c.assign(1, Color::C3);
    for (int leaf = 3; leaf <= 5; ++leaf) c.assign(leaf, Color::C3);  // 1 is 3-saturated
    c.assign(2, Color::C4);
    for (int leaf = 6; leaf <= 9; ++leaf) c.assign(leaf, Color::C4);  // 2 is 4-saturated
    CHECK(!c.can_assign(0, Color::C3));
    CHECK(!c.can_assign(0, Color::C4));

    auto plan = recoloring_search(c, 0, 6);
    REQUIRE(plan.has_value());
    DefectiveColoring replay = c;
    for (std::size_t i = 0; i < plan->moves.size(); ++i) {
        const auto& move = plan->moves[i];
        if (move.vertex == 0) {
            CHECK(i + 1 == plan->moves.size());
            REQUIRE(replay.can_assign(0, move.color));
            replay.assign(0, move.color);
        } else {
            auto out = replay.safe_flip(move.vertex);
            REQUIRE(out.flipped);
            CHECK(replay.color(move.vertex) == move.color);
        }
    }
    CHECK(replay.colored(0));
}
