#ifndef COOP_SHAPLEY_HPP
#define COOP_SHAPLEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "coop/boycott.hpp"
#include "coop/game.hpp"

namespace coop {

/// Per-player exact allocation; coordinate i is player i's value.
using ValueVector = std::vector<Rational>;

/// Exact Shapley value. Efficient (the coordinates sum to v(N)), zero for
/// null players, equal for symmetric players. Exact rationals throughout.
ValueVector shapley_exact(const Game& g);

enum class BoycottRole { boycotter, boycotted, bystander };

const char* role_name(BoycottRole role);

/// Per-player effect of a boycott: impact_i = phi_i(v) - phi_i(v^AB),
/// positive when the player loses. Carries pre/post vectors for reporting.
struct ImpactVector {
    std::vector<Rational> pre;    // phi(v)
    std::vector<Rational> post;   // phi(v^AB)
    std::vector<Rational> impact; // pre - post
    std::vector<BoycottRole> roles;

    /// v(N) - v^AB(N); equals the sum of impacts by efficiency.
    Rational total() const;
};

/// Impact via the direct route: Shapley of the game minus Shapley of the
/// boycott game.
ImpactVector impact(const Game& g, const BoycottSpec& spec);

/// Impact via the additive subgame decomposition
///   phi(v) - phi(v_comp(A)) - phi(v_comp(B)) + phi(v_comp(A u B)).
/// Agrees with impact() exactly on every input.
ImpactVector impact_decomposed(const Game& g, const BoycottSpec& spec);

/// A player whose boycott-game value differs from its value in the game with
/// the opposing coalition removed.
struct RespectWitness {
    PlayerId player;
    Rational in_boycott_game;
    Rational in_reduced_game;
    std::string to_string() const;
};

/// Verifies, for every i in A, that phi_i(v^AB) equals i's Shapley value in
/// the game restricted to N \ B, and symmetrically for every j in B against
/// N \ A. Holds for all games and all disjoint pairs.
std::optional<RespectWitness> boycott_respecting_witness(const Game& g, const BoycottSpec& spec);

inline bool check_boycott_respecting(const Game& g, const BoycottSpec& spec) {
    return !boycott_respecting_witness(g, spec).has_value();
}

/// The two sides of an unbalanced one-on-one boycott.
struct BalanceWitness {
    Rational impact_on_i;
    Rational impact_on_j;
};

/// Checks phi_i(v) - phi_i(v^ij) = phi_j(v) - phi_j(v^ij) for the one-on-one
/// boycott of i against j. Throws OverlappingArguments when i == j.
std::optional<BalanceWitness> balanced_impact_witness(const Game& g, PlayerId i, PlayerId j);

inline bool check_balanced_impact(const Game& g, PlayerId i, PlayerId j) {
    return !balanced_impact_witness(g, i, j).has_value();
}

} // namespace coop

#endif // COOP_SHAPLEY_HPP
