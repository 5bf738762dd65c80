#include "coop/shapley.hpp"

#include <bit>

#include "coop/detail/scaled.hpp"

namespace coop {

ValueVector shapley_exact(const Game& g) {
    const detail::ScaledTable scaled = detail::scale_table(g);
    return detail::shapley_from_nums(scaled.nums, scaled.den, g.player_count());
}

const char* role_name(BoycottRole role) {
    switch (role) {
    case BoycottRole::boycotter:
        return "boycotter";
    case BoycottRole::boycotted:
        return "boycotted";
    case BoycottRole::bystander:
        return "bystander";
    }
    return "?";
}

Rational ImpactVector::total() const {
    Rational sum = 0;
    for (const Rational& x : impact) {
        sum += x;
    }
    return sum;
}

namespace {

std::vector<BoycottRole> roles_for(const Game& g, const BoycottSpec& spec) {
    std::vector<BoycottRole> roles(static_cast<std::size_t>(g.player_count()),
                                   BoycottRole::bystander);
    for (PlayerId p : spec.boycotters.members()) {
        roles[static_cast<std::size_t>(p)] = BoycottRole::boycotter;
    }
    for (PlayerId p : spec.boycotted.members()) {
        roles[static_cast<std::size_t>(p)] = BoycottRole::boycotted;
    }
    return roles;
}

ImpactVector impact_from_vectors(const Game& g, const BoycottSpec& spec, ValueVector pre,
                                 ValueVector post) {
    ImpactVector out;
    out.impact.resize(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i) {
        out.impact[i] = pre[i] - post[i];
    }
    out.pre = std::move(pre);
    out.post = std::move(post);
    out.roles = roles_for(g, spec);
    return out;
}

} // namespace

ImpactVector impact(const Game& g, const BoycottSpec& spec) {
    return impact_from_vectors(g, spec, shapley_exact(g), shapley_exact(boycott(g, spec)));
}

ImpactVector impact_decomposed(const Game& g, const BoycottSpec& spec) {
    if (spec.boycotters.universe_size() != g.player_count()) {
        throw InvalidCoalition("boycott spec universe mismatch");
    }
    const int n = g.player_count();
    const detail::ScaledTable scaled = detail::scale_table(g);
    const Mask comp_a = g.full_mask() & ~spec.boycotters.bits();
    const Mask comp_b = g.full_mask() & ~spec.boycotted.bits();

    std::vector<BigInt> nums;
    detail::subgame_nums(scaled, comp_a, nums);
    const ValueVector phi_no_a = detail::shapley_from_nums(nums, scaled.den, n);
    detail::subgame_nums(scaled, comp_b, nums);
    const ValueVector phi_no_b = detail::shapley_from_nums(nums, scaled.den, n);
    detail::subgame_nums(scaled, comp_a & comp_b, nums);
    const ValueVector phi_no_ab = detail::shapley_from_nums(nums, scaled.den, n);

    ValueVector pre = detail::shapley_from_nums(scaled.nums, scaled.den, n);
    ValueVector post(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i) {
        // phi(v^AB) = phi(v_comp(A)) + phi(v_comp(B)) - phi(v_comp(A u B))
        // by additivity of the Shapley value over the subgame sum.
        post[i] = phi_no_a[i] + phi_no_b[i] - phi_no_ab[i];
    }
    return impact_from_vectors(g, spec, std::move(pre), std::move(post));
}

std::string RespectWitness::to_string() const {
    return "player " + std::to_string(player) + ": " + to_fraction_string(in_boycott_game) +
           " in the boycott game vs " + to_fraction_string(in_reduced_game) +
           " with the opponent removed";
}

namespace {

// Index of player p within the ascending member list of `kept`.
int reduced_index(Mask kept, PlayerId p) {
    return std::popcount(kept & (player_bit(p) - 1));
}

std::optional<RespectWitness> respect_side(const Game& g, const ValueVector& boycott_phi,
                                           const Coalition& side, const Coalition& opponents) {
    if (side.is_empty()) {
        return std::nullopt;
    }
    const Coalition kept = opponents.complement();
    const ValueVector reduced_phi = shapley_exact(restrict_to(g, kept));
    for (PlayerId p : side.members()) {
        const Rational& lhs = boycott_phi[static_cast<std::size_t>(p)];
        const Rational& rhs =
            reduced_phi[static_cast<std::size_t>(reduced_index(kept.bits(), p))];
        if (lhs != rhs) {
            return RespectWitness{p, lhs, rhs};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<RespectWitness> boycott_respecting_witness(const Game& g, const BoycottSpec& spec) {
    const ValueVector boycott_phi = shapley_exact(boycott(g, spec));
    if (auto w = respect_side(g, boycott_phi, spec.boycotters, spec.boycotted)) {
        return w;
    }
    return respect_side(g, boycott_phi, spec.boycotted, spec.boycotters);
}

std::optional<BalanceWitness> balanced_impact_witness(const Game& g, PlayerId i, PlayerId j) {
    const BoycottSpec spec = BoycottSpec::one_on_one(i, j, g.player_count());
    const ImpactVector result = impact(g, spec);
    const Rational& on_i = result.impact[static_cast<std::size_t>(i)];
    const Rational& on_j = result.impact[static_cast<std::size_t>(j)];
    if (on_i != on_j) {
        return BalanceWitness{on_i, on_j};
    }
    return std::nullopt;
}

} // namespace coop
