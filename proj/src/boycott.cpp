#include "coop/boycott.hpp"

namespace coop {

BoycottSpec::BoycottSpec(Coalition a, Coalition b) : boycotters(a), boycotted(b) {
    if (!boycotters.disjoint_from(boycotted)) {
        throw OverlappingArguments("boycott sides must be disjoint, got " + boycotters.to_string() +
                                   " and " + boycotted.to_string());
    }
}

BoycottSpec BoycottSpec::one_on_one(PlayerId i, PlayerId j, int universe_size) {
    if (i == j) {
        throw OverlappingArguments("one-on-one boycott needs two distinct players, got " +
                                   std::to_string(i) + " twice");
    }
    return BoycottSpec(Coalition::single(i, universe_size), Coalition::single(j, universe_size));
}

std::string BoycottSpec::to_string() const {
    return "A=" + boycotters.to_string() + " B=" + boycotted.to_string();
}

Game boycott(const Game& g, const BoycottSpec& spec) {
    if (spec.boycotters.universe_size() != g.player_count()) {
        throw InvalidCoalition("boycott spec universe mismatch");
    }
    const Mask a = spec.boycotters.bits();
    const Mask b = spec.boycotted.bits();
    const Mask both = a | b;
    std::vector<Rational> table(g.table_size());
    for (Mask s = 0; s < table.size(); ++s) {
        table[s] = g.value(s & ~a) + g.value(s & ~b) - g.value(s & ~both);
    }
    return Game(g.player_count(), std::move(table), g.player_names());
}

std::optional<std::string> boycott_construction_defect(const Game& g, const BoycottSpec& spec,
                                                       const Game& result) {
    const Mask a = spec.boycotters.bits();
    const Mask b = spec.boycotted.bits();
    const Mask full = g.full_mask();

    // Clause 1: coalitions missing A or B entirely keep their worth.
    for (Mask s = 0; s <= full; ++s) {
        if (((s & a) == 0 || (s & b) == 0) && result.value(s) != g.value(s)) {
            return "clause 1 fails at S=" + mask_to_string(s) + ": got " +
                   to_fraction_string(result.value(s)) + ", original " +
                   to_fraction_string(g.value(s));
        }
    }

    // Clause 2: A and B are disjointly productive in the result.
    if (auto w = disjoint_productivity_witness(result, spec.boycotters, spec.boycotted)) {
        return "clause 2 fails: " + w->to_string();
    }

    // Decomposition: result(S u A' u B') = v(S u A') + v(S u B') - v(S) for
    // S disjoint from A u B. Every coalition splits uniquely this way.
    for (Mask s = 0; s <= full; ++s) {
        const Mask outside = s & ~(a | b);
        const Mask in_a = s & a;
        const Mask in_b = s & b;
        const Rational expected =
            g.value(outside | in_a) + g.value(outside | in_b) - g.value(outside);
        if (result.value(s) != expected) {
            return "decomposition fails at S=" + mask_to_string(s) + ": got " +
                   to_fraction_string(result.value(s)) + ", expected " +
                   to_fraction_string(expected);
        }
    }
    return std::nullopt;
}

std::optional<Mask> dominance_witness(const Game& lhs, const Game& rhs) {
    if (lhs.player_count() != rhs.player_count()) {
        throw Error("dominance check requires games over the same universe");
    }
    for (Mask s = 0; s < lhs.table_size(); ++s) {
        if (lhs.value(s) < rhs.value(s)) {
            return s;
        }
    }
    return std::nullopt;
}

} // namespace coop
