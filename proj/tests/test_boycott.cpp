#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coop/boycott.hpp"
#include "coop/generators.hpp"

#include "oracles.hpp"

using namespace coop;

namespace {

std::vector<BoycottSpec> all_disjoint_pairs(int n) {
    std::vector<BoycottSpec> specs;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask a = 0; a <= full; ++a) {
        const Mask rest = full & ~a;
        Mask b = 0;
        while (true) {
            specs.emplace_back(Coalition(a, n), Coalition(b, n));
            if (b == rest) {
                break;
            }
            b = (b - rest) & rest;
        }
    }
    return specs;
}

} // namespace

TEST_CASE("boycott spec validates") {
    CHECK_THROWS_AS(BoycottSpec(Coalition(0b011, 3), Coalition(0b010, 3)), OverlappingArguments);
    CHECK_THROWS_AS(BoycottSpec::one_on_one(1, 1, 3), OverlappingArguments);
    const BoycottSpec spec = BoycottSpec::one_on_one(0, 2, 3);
    CHECK(spec.boycotters == Coalition::single(0, 3));
    CHECK(spec.boycotted == Coalition::single(2, 3));
    CHECK(spec.participants() == Mask{0b101});
    CHECK(spec.to_string() == "A={0} B={2}");
}

TEST_CASE("triangle one-on-one boycott table") {
    // 6(|S|-1) with players 1 and 2 falling out: only coalitions containing
    // both of them change, and they lose exactly v({1,2}) - v({1}) - v({2}).
    const Game g = triangle_example();
    const Game after = boycott(g, BoycottSpec::one_on_one(0, 1, 3));
    const std::vector<Rational> expected{0, 0, 0, 0, 0, 6, 6, 12};
    CHECK(after.table() == expected);
    CHECK(after.player_names() == g.player_names());
}

TEST_CASE("boycott matches the additive decomposition on every coalition") {
    const std::vector<Game> games{triangle_example(), homogeneous_block(5),
                                  heterogeneous_block(4, 1), random_game(5, 3),
                                  random_convex(5, 4)};
    for (const Game& g : games) {
        for (const BoycottSpec& spec : all_disjoint_pairs(g.player_count())) {
            const Game via_subgames = boycott(g, spec);
            CHECK(via_subgames == oracles::boycott_by_decomposition(g, spec));
            CHECK(boycott_construction_defect(g, spec, via_subgames) == std::nullopt);
        }
    }
}

TEST_CASE("construction defect catches tampered tables") {
    const Game g = homogeneous_block(4);
    const BoycottSpec spec(g.coalition(0b0011), g.coalition(0b0100));
    std::vector<Rational> table = boycott(g, spec).table();
    table[0b0110] += 1;
    const Game tampered(4, std::move(table));
    CHECK(boycott_construction_defect(g, spec, tampered).has_value());
}

TEST_CASE("boycott is symmetric in its sides and idempotent") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Game g = random_game(5, seed);
        for (const BoycottSpec& spec : all_disjoint_pairs(5)) {
            const Game once = boycott(g, spec);
            CHECK(once == boycott(g, BoycottSpec(spec.boycotted, spec.boycotters)));
            CHECK(boycott(once, spec) == once);
        }
    }
}

TEST_CASE("an empty side leaves the game unchanged") {
    const Game g = random_game(4, 9);
    CHECK(boycott(g, BoycottSpec(Coalition::empty(4), g.coalition(0b0110))) == g);
    CHECK(boycott(g, BoycottSpec(g.coalition(0b0110), Coalition::empty(4))) == g);
}

TEST_CASE("boycott rejects a spec from another universe") {
    const Game g = triangle_example();
    CHECK_THROWS_AS(boycott(g, BoycottSpec::one_on_one(0, 1, 4)), InvalidCoalition);
}

TEST_CASE("dominance witness") {
    const Game g = triangle_example();
    const Game after = boycott(g, BoycottSpec::one_on_one(0, 1, 3));
    // Supermodular game: the boycott never raises a coalition's worth.
    CHECK(dominates(g, after));
    CHECK(dominance_witness(g, after) == std::nullopt);
    // The reverse direction fails first at the smallest changed mask {0,1}.
    const auto w = dominance_witness(after, g);
    REQUIRE(w.has_value());
    CHECK(*w == Mask{0b011});
    CHECK_THROWS_AS(dominance_witness(g, homogeneous_block(2)), Error);
}
