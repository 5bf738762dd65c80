// Independent reference implementations used to cross-check the library.
// Deliberately written the slow, literal way: the permutation average for
// Shapley values, the (S, T) definition of supermodularity, and the additive
// decomposition of the boycott game. Tests treat these as ground truth.

#ifndef COOP_TESTS_ORACLES_HPP
#define COOP_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "coop/boycott.hpp"
#include "coop/game.hpp"
#include "coop/rational.hpp"

namespace oracles {

using coop::BigInt;
using coop::Game;
using coop::Mask;
using coop::PlayerId;
using coop::Rational;

/// Shapley value as the literal average of marginal contributions over all
/// n! player orderings. O(n! * n); intended for n <= 6.
inline std::vector<Rational> shapley_by_permutations(const Game& g) {
    const int n = g.player_count();
    std::vector<PlayerId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> sum(static_cast<std::size_t>(n));
    BigInt count = 0;
    do {
        Mask prefix = 0;
        for (PlayerId p : order) {
            const Mask bit = coop::player_bit(p);
            sum[static_cast<std::size_t>(p)] += g.value(prefix | bit) - g.value(prefix);
            prefix |= bit;
        }
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    for (Rational& v : sum) {
        v /= Rational(count);
    }
    return sum;
}

/// Supermodularity straight from the definition:
/// v(S u T) + v(S n T) >= v(S) + v(T) for all S, T. O(4^n).
inline bool supermodular_by_definition(const Game& g) {
    const Mask full = g.full_mask();
    for (Mask s = 0; s <= full; ++s) {
        for (Mask t = 0; t <= full; ++t) {
            if (g.value(s | t) + g.value(s & t) < g.value(s) + g.value(t)) {
                return false;
            }
        }
    }
    return true;
}

/// The boycott game built from its additive decomposition: every coalition
/// splits uniquely as S u A' u B' with S outside A u B, A' in A, B' in B,
/// and the worth is v(S u A') + v(S u B') - v(S).
inline Game boycott_by_decomposition(const Game& g, const coop::BoycottSpec& spec) {
    const Mask a = spec.boycotters.bits();
    const Mask b = spec.boycotted.bits();
    std::vector<Rational> table(g.table_size());
    for (Mask t = 0; t < static_cast<Mask>(g.table_size()); ++t) {
        const Mask s = t & ~(a | b);
        const Mask ap = t & a;
        const Mask bp = t & b;
        table[t] = g.value(s | ap) + g.value(s | bp) - g.value(s);
    }
    return Game(g.player_count(), std::move(table), g.player_names());
}

} // namespace oracles

#endif // COOP_TESTS_ORACLES_HPP
