#ifndef COOP_DETAIL_SCALED_HPP
#define COOP_DETAIL_SCALED_HPP

#include <vector>

#include "coop/game.hpp"

namespace coop::detail {

/// Integer view of a game table: value(S) = nums[S] / den with den > 0 the
/// least common multiple of the table denominators. Hot enumeration loops
/// (Shapley sums, dominance scans) run on this form and normalize once at
/// the end, which keeps the arithmetic exact without a gcd per operation.
struct ScaledTable {
    std::vector<BigInt> nums;
    BigInt den;
};

ScaledTable scale_table(const Game& g);

/// nums of the boycott game of `base` under (A, B), same denominator.
/// out is resized to base.nums.size().
void boycott_nums(const ScaledTable& base, Mask a, Mask b, std::vector<BigInt>& out);

/// nums of the subgame on C, same denominator.
void subgame_nums(const ScaledTable& base, Mask within, std::vector<BigInt>& out);

/// Exact Shapley value from an integer table via the subset-weighted sum
///   phi_i = sum_{S not containing i} |S|! (n-|S|-1)! (v(S u i) - v(S)) / n!.
std::vector<Rational> shapley_from_nums(const std::vector<BigInt>& nums, const BigInt& den,
                                        int player_count);

/// Factorial weights w[s] = s! * (n-1-s)! for s in [0, n).
std::vector<BigInt> shapley_weights(int player_count);

BigInt factorial(int k);

} // namespace coop::detail

#endif // COOP_DETAIL_SCALED_HPP
