#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coop/game.hpp"
#include "coop/generators.hpp"

#include "oracles.hpp"

using namespace coop;

namespace {

Game make_game(int n, std::vector<int> values) {
    std::vector<Rational> table(values.begin(), values.end());
    return Game(n, std::move(table));
}

} // namespace

TEST_CASE("construction validates the table") {
    CHECK_NOTHROW(make_game(1, {0, 5}));
    CHECK_THROWS_AS(make_game(2, {0, 1, 2}), LengthMismatch);
    CHECK_THROWS_AS(make_game(2, {1, 1, 2, 3}), NonzeroEmptyCoalition);
    CHECK_THROWS_AS(make_game(0, {0}), SizeLimitExceeded);
    CHECK_THROWS_AS(Game(21, {}), SizeLimitExceeded);
    CHECK_THROWS_AS(Game(3, std::vector<Rational>(8), {"a", "b"}), LengthMismatch);
}

TEST_CASE("value accessors and equality") {
    const Game g = make_game(2, {0, 1, 2, 4});
    CHECK(g.player_count() == 2);
    CHECK(g.full_mask() == 0b11);
    CHECK(g.value(Mask{0b01}) == 1);
    CHECK(g.value(g.coalition(0b10)) == 2);
    CHECK(g.grand_value() == 4);
    CHECK(g == make_game(2, {0, 1, 2, 4}));
    CHECK_FALSE(g == make_game(2, {0, 1, 2, 5}));
    // Names are presentation only.
    CHECK(g == Game(2, g.table(), {"left", "right"}));
}

TEST_CASE("player labels") {
    const Game anonymous = make_game(1, {0, 1});
    CHECK(anonymous.player_label(0) == "0");
    const Game named(1, {Rational(0), Rational(1)}, {"alice"});
    CHECK(named.player_label(0) == "alice");
}

TEST_CASE("game addition is per-coalition") {
    const Game a = make_game(2, {0, 1, 2, 4});
    const Game b = make_game(2, {0, 10, 20, 40});
    const Game sum = a + b;
    CHECK(sum.value(Mask{3}) == 44);
    CHECK_THROWS_AS(a + make_game(1, {0, 1}), LengthMismatch);
}

TEST_CASE("marginal contribution requires disjoint arguments") {
    const Game g = make_game(2, {0, 1, 2, 4});
    CHECK(marginal(g, g.coalition(0b01), g.coalition(0b10)) == 2);
    CHECK(marginal(g, g.coalition(0b11), g.coalition(0)) == 4);
    CHECK_THROWS_AS(marginal(g, g.coalition(0b01), g.coalition(0b01)), OverlappingArguments);
}

TEST_CASE("subgame zeroes out everything outside the coalition") {
    const Game g = triangle_example();
    const Game sub = subgame(g, g.coalition(0b011));
    CHECK(sub.player_count() == 3);
    CHECK(sub.value(Mask{0b011}) == 6);
    CHECK(sub.value(Mask{0b111}) == 6);  // player 2 adds nothing
    CHECK(sub.value(Mask{0b100}) == 0);
    CHECK(is_null_player(sub, 2));
    CHECK_FALSE(is_null_player(sub, 0));
}

TEST_CASE("subgame composes through intersections") {
    const Game g = random_game(4, 7);
    const Coalition c = g.coalition(0b1011);
    const Coalition d = g.coalition(0b1110);
    CHECK(subgame(subgame(g, c), d) == subgame(g, c.intersect(d)));
}

TEST_CASE("restrict_to reindexes the kept players in ascending order") {
    const Game g = triangle_example();
    const Game kept = restrict_to(g, g.coalition(0b101));
    CHECK(kept.player_count() == 2);
    CHECK(kept.value(Mask{0b01}) == g.value(Mask{0b001}));
    CHECK(kept.value(Mask{0b10}) == g.value(Mask{0b100}));
    CHECK(kept.value(Mask{0b11}) == g.value(Mask{0b101}));
    CHECK(kept.player_label(1) == "3");
    CHECK_THROWS_AS(restrict_to(g, g.coalition(0)), EmptyRestriction);
}

TEST_CASE("supermodularity check matches the (S, T) definition") {
    CHECK(is_supermodular(homogeneous_block(4)));
    CHECK(is_supermodular(triangle_example()));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Game g = random_game(4, seed);
        CHECK(is_supermodular(g) == oracles::supermodular_by_definition(g));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Game g = random_convex(5, seed);
        CHECK(oracles::supermodular_by_definition(g));
        CHECK(is_supermodular(g));
    }
}

TEST_CASE("supermodularity witness is lexicographically smallest") {
    // Concave on purpose: the pair (0, 1) already fails in the empty context.
    const Game g = make_game(2, {0, 1, 1, 1});
    const auto w = supermodularity_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->i == 0);
    CHECK(w->j == 1);
    CHECK(w->context == 0);

    // Pairs (0,1) and (0,2) hold everywhere; (1,2) fails in the empty context:
    // v({1,2}) + v({}) = 1 < 2 = v({1}) + v({2}).
    const Game h = make_game(3, {0, 0, 1, 1, 1, 1, 1, 3});
    const auto wh = supermodularity_witness(h);
    REQUIRE(wh.has_value());
    CHECK(wh->i == 1);
    CHECK(wh->j == 2);
    CHECK(wh->context == 0);
}

TEST_CASE("disjoint productivity") {
    // Additive games: every marginal is a constant, so any disjoint pair of
    // coalitions is disjointly productive.
    const Game additive = make_game(2, {0, 3, 5, 8});
    CHECK(are_disjointly_productive(additive, additive.coalition(0b01),
                                    additive.coalition(0b10)));

    // In the block game the pair {i}, {j} interacts: dv_i({j}) = 1 != 0 = dv_i({}).
    const Game block = homogeneous_block(3);
    const auto w =
        disjoint_productivity_witness(block, block.coalition(0b001), block.coalition(0b010));
    REQUIRE(w.has_value());
    CHECK(w->i == 0);
    CHECK(w->j == 1);
    CHECK(w->context == 0);

    CHECK_THROWS_AS(disjoint_productivity_witness(block, block.coalition(0b011),
                                                  block.coalition(0b010)),
                    OverlappingArguments);
    // Vacuous when a side is empty.
    CHECK(are_disjointly_productive(block, block.coalition(0), block.coalition(0b010)));
}

TEST_CASE("null and invariant players") {
    const Game g = make_game(2, {0, 0, 7, 7});
    CHECK(is_null_player(g, 0));
    CHECK_FALSE(is_null_player(g, 1));

    const Game changed = make_game(2, {0, 0, 7, 9});
    CHECK_FALSE(is_invariant_player(g, changed, 1));
    CHECK_FALSE(is_invariant_player(g, changed, 0)); // {0,1} contains 0 and changed
    const Game same = make_game(2, {0, 1, 7, 7});
    CHECK(is_invariant_player(g, same, 1));
}
