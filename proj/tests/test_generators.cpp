#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "coop/boycott.hpp"
#include "coop/generators.hpp"
#include "coop/shapley.hpp"

#include "oracles.hpp"

using namespace coop;

TEST_CASE("homogeneous block") {
    const Game g = homogeneous_block(5);
    for (Mask s = 1; s <= g.full_mask(); ++s) {
        CHECK(g.value(s) == std::popcount(s) - 1);
    }
    const ValueVector phi = shapley_exact(g);
    for (PlayerId p = 0; p < 5; ++p) {
        CHECK(phi[static_cast<std::size_t>(p)] == Rational(4, 5)); // 1 - 1/n
    }
    CHECK(is_supermodular(g));
    CHECK_THROWS_AS(homogeneous_block(0), SizeLimitExceeded);
}

TEST_CASE("heterogeneous block") {
    const Game g = heterogeneous_block(4, 2);
    CHECK(g.value(Mask{0b0011}) == 1);
    CHECK(g.value(Mask{0b0110}) == 3);  // contains the special player
    CHECK(g.value(Mask{0b0100}) == 0);
    const ValueVector phi = shapley_exact(g);
    CHECK(phi[2] == Rational(4 * 4 - 1, 4));      // n - 1/n
    CHECK(phi[0] == Rational(2 * 4 - 1, 4));      // 2 - 1/n
    CHECK(is_supermodular(g));
    CHECK_THROWS_AS(heterogeneous_block(4, 4), Error);
    CHECK_THROWS_AS(heterogeneous_block(1, 0), Error); // needs an ordinary player
}

TEST_CASE("three-block game") {
    const Game g = three_block(2);
    CHECK(g.player_count() == 6);
    const ThreeBlockLayout layout = three_block_layout(2);
    CHECK(layout.key_i == 0);
    CHECK(layout.key_j == 2);
    CHECK(layout.key_k == 4);
    CHECK(layout.block_i == Coalition(0b000011, 6));
    CHECK(layout.block_j == Coalition(0b001100, 6));
    CHECK(layout.block_k == Coalition(0b110000, 6));

    CHECK(g.grand_value() == 18); // 9n
    // One key present: plain |S|.
    CHECK(g.value(layout.block_i.bits()) == 2);
    // Keys i and j with their blocks: |S| + |SnI| + |SnJ| = 4 + 2 + 2.
    CHECK(g.value(Mask{0b001111}) == 8);
    // Keys alone from two blocks: 2 + 1 + 1.
    CHECK(g.value(Mask{0b000101}) == 4);
    // All three keys: 3|S|.
    CHECK(g.value(Mask{0b010101}) == 9);
    CHECK(is_supermodular(g));

    CHECK(g.player_label(0) == "i");
    CHECK(g.player_label(1) == "I2");
    CHECK(g.player_label(2) == "j");
    CHECK(g.player_label(5) == "K2");

    CHECK_THROWS_AS(three_block(7), SizeLimitExceeded); // 21 players
}

TEST_CASE("three-block Shapley closed forms") {
    for (int n : {1, 2, 3}) {
        const Game g = three_block(n);
        const ValueVector phi = shapley_exact(g);
        const ThreeBlockLayout layout = three_block_layout(n);
        const Rational key_value = Rational(4 * n, 3) + Rational(5, 3);
        for (PlayerId p = 0; p < g.player_count(); ++p) {
            const bool is_key = p == layout.key_i || p == layout.key_j || p == layout.key_k;
            CHECK(phi[static_cast<std::size_t>(p)] == (is_key ? key_value : Rational(5, 3)));
        }
    }
}

TEST_CASE("triangle example") {
    const Game g = triangle_example();
    CHECK(g.table() == std::vector<Rational>{0, 0, 0, 6, 0, 6, 6, 12});
    CHECK(g.player_names() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("graphs validate and normalize their edges") {
    const Graph g(3, {{2, 1}, {1, 2}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);

    const Graph complete = Graph::complete(3);
    CHECK(complete.edges().size() == 3);
    const Graph cut = complete.without_edge(1, 0);
    CHECK_FALSE(cut.has_edge(0, 1));
    CHECK(cut.edges().size() == 2);
}

TEST_CASE("myerson restriction sums component worths") {
    const Game base = triangle_example();
    // Path 0-1-2: {0,2} is disconnected and splits into singletons.
    const Game path = myerson_restriction(base, Graph(3, {{0, 1}, {1, 2}}));
    CHECK(path.table() == std::vector<Rational>{0, 0, 0, 6, 0, 0, 6, 12});
    // The complete graph changes nothing.
    CHECK(myerson_restriction(base, Graph::complete(3)) == base);
    // No edges: the game becomes additive over singletons.
    const Game isolated = myerson_restriction(base, Graph(3, {}));
    for (Mask s = 0; s <= base.full_mask(); ++s) {
        CHECK(isolated.value(s) == 0);
    }
    CHECK_THROWS_AS(myerson_restriction(base, Graph(4, {})), Error);
}

TEST_CASE("deleting a graph edge equals the one-on-one boycott") {
    const Game base = triangle_example();
    const Game cut = myerson_restriction(base, Graph::complete(3).without_edge(0, 1));
    CHECK(cut == boycott(base, BoycottSpec::one_on_one(0, 1, 3)));
}

TEST_CASE("random games are deterministic in their seed") {
    CHECK(random_game(5, 42) == random_game(5, 42));
    CHECK_FALSE(random_game(5, 42) == random_game(5, 43));
    CHECK(random_game(5, 42).value(Mask{0}) == 0);

    CHECK(random_convex(5, 42) == random_convex(5, 42));
    CHECK_FALSE(random_convex(5, 42) == random_convex(4, 42));
}

TEST_CASE("random convex games are supermodular") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        CHECK(oracles::supermodular_by_definition(random_convex(4, seed)));
    }
}

TEST_CASE("families and scenario specs") {
    CHECK(family_from_name("three_block") == Family::three_block);
    CHECK(family_from_name("nope") == std::nullopt);
    for (Family f : {Family::homogeneous, Family::heterogeneous, Family::three_block,
                     Family::triangle, Family::myerson, Family::random_convex,
                     Family::random_any}) {
        CHECK(family_from_name(family_name(f)) == f);
    }

    ScenarioSpec spec;
    spec.family = Family::heterogeneous;
    spec.n = 4;
    spec.special = 2;
    CHECK(instantiate(spec) == heterogeneous_block(4, 2));

    spec.special = 9;
    CHECK_THROWS_AS(instantiate(spec), Error);

    ScenarioSpec myerson_spec;
    myerson_spec.family = Family::myerson;
    CHECK_THROWS_AS(instantiate(myerson_spec), Error); // base and graph missing
}
