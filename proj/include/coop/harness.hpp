#ifndef COOP_HARNESS_HPP
#define COOP_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coop/boycott.hpp"
#include "coop/generators.hpp"
#include "coop/shapley.hpp"

namespace coop {

/// Outcome of machine-checking one theorem on one game instance.
struct TheoremReport {
    std::string theorem_id;
    std::string instance;
    bool holds = true;
    /// Re-checkable description of the violating configuration; empty iff
    /// the theorem holds on this instance.
    std::string witness;
    /// Supporting data for verdicts that rest on finding something (e.g. the
    /// dominance counterexample confirming the convexity converse).
    std::string details;
    std::uint64_t cases_checked = 0;

    std::string to_string() const;
};

/// Enumeration policy for theorem checks: exhaustive over all specs, or a
/// seeded random sample of `trials` specs.
struct EnumerationPlan {
    bool exhaustive = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static EnumerationPlan all() { return {true, 0, 0}; }
    static EnumerationPlan sampled(std::uint64_t trials, std::uint64_t seed) {
        return {false, trials, seed};
    }
};

/// Biconditional check: the boycott transform never raises any coalition's
/// worth (for every disjoint A, B) if and only if the game is supermodular.
/// Enumerates all 3^n disjoint (A, B) assignments; throws InstanceTooLarge
/// when n > 10.
TheoremReport verify_convexity_theorem(const Game& g);

/// For a supermodular game and nested pairs A within C, B within D (C, D
/// disjoint), the larger boycott hurts more: v^CD <= v^AB pointwise.
TheoremReport verify_nested_monotonicity(const Game& g,
                                         const EnumerationPlan& plan = EnumerationPlan::all());

/// For a supermodular game and any many-on-one boycott of {i} against B,
/// no player's impact exceeds the impact on i.
TheoremReport verify_many_on_one(const Game& g,
                                 const EnumerationPlan& plan = EnumerationPlan::all());

/// For a supermodular game: impact >= 0 for every participant (members of
/// A and B) and impact <= 0 for every invariant player.
TheoremReport verify_sign_theorem(const Game& g,
                                  const EnumerationPlan& plan = EnumerationPlan::all());

/// For disjointly productive A and B: dv_B'(S u A') = dv_B'(S) for all
/// A' within A, B' within B and S disjoint from A u B.
TheoremReport verify_lemma1(const Game& g, const Coalition& a, const Coalition& b);

/// One row of a scenario reproduction: a player's value before and after the
/// boycott, the impact, the player's role, and the closed-form expectation
/// where one is known. Advisory expectations are prose-level claims surfaced
/// for inspection; their mismatches do not fail the scenario.
struct ScenarioRow {
    PlayerId player;
    std::string label;
    Rational pre;
    Rational post;
    Rational impact;
    BoycottRole role;
    std::optional<Rational> expected_pre;
    std::optional<Rational> expected_post;
    bool advisory = false;
    bool match = true;
};

struct ScenarioReport {
    std::string scenario_id;
    BoycottSpec spec;
    std::vector<ScenarioRow> rows;
    /// Findings and identity checks that do not fit the row format, e.g.
    /// grand-coalition totals or impact-maximizer sets. Deterministic.
    std::vector<std::string> notes;
    /// True when every non-advisory expectation matched exactly.
    bool all_match = true;

    std::string to_string() const;
};

/// Computes pre/post Shapley values and impacts for a generated game and a
/// boycott, attaching exact expectations for the recognized scenario shapes.
ScenarioReport run_scenario(const ScenarioSpec& spec, const BoycottSpec& boycott_spec);

// Canned scenarios with canonical coalition choices.
ScenarioReport scenario_triangle();
ScenarioReport scenario_homogeneous(int player_count, int boycotter_count, int boycotted_count);
ScenarioReport scenario_heterogeneous(int player_count, int boycotter_count);
/// Block boycott: I boycotts J.
ScenarioReport scenario_three_block_blocks(int block_size);
/// Dropout: key player i leaves the boycott, so I \ {i} boycotts J.
ScenarioReport scenario_three_block_dropout(int block_size);

} // namespace coop

#endif // COOP_HARNESS_HPP
