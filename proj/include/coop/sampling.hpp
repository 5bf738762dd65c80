#ifndef COOP_SAMPLING_HPP
#define COOP_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "coop/game.hpp"

namespace coop {

/// Monte-Carlo Shapley estimate from m uniformly drawn player orderings.
struct SampledValueVector {
    std::vector<double> estimate;
    std::vector<double> std_error; // nonnegative; 0 when m == 1
    std::uint64_t permutations;
    std::uint64_t seed;
};

/// Permutation-sampling Shapley estimator: each permutation contributes one
/// marginal per player (the player's marginal when joining its prefix), and
/// phi_i is estimated as the mean over m permutations. Unbiased, with per
/// player standard errors from the sample variance. Permutation t is driven
/// by its own RNG stream derived from (seed, t), so the result is a pure
/// function of (game, m, seed). Requires m >= 1.
SampledValueVector shapley_sampled(const Game& g, std::uint64_t permutations, std::uint64_t seed);

} // namespace coop

#endif // COOP_SAMPLING_HPP
