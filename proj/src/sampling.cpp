#include "coop/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "coop/rng.hpp"

namespace coop {

SampledValueVector shapley_sampled(const Game& g, std::uint64_t permutations, std::uint64_t seed) {
    if (permutations < 1) {
        throw Error("permutation count must be at least 1");
    }
    const int n = g.player_count();
    const std::size_t np = static_cast<std::size_t>(n);

    std::vector<double> table(g.table_size());
    for (std::size_t s = 0; s < table.size(); ++s) {
        table[s] = to_double(g.value(static_cast<Mask>(s)));
    }

    std::vector<double> sum(np, 0.0);
    std::vector<double> sum_sq(np, 0.0);
    std::vector<PlayerId> order(np);

    // Accumulation runs in permutation order, and permutation t depends only
    // on (seed, t), so the result is bit-identical for a fixed (seed, m).
    for (std::uint64_t t = 0; t < permutations; ++t) {
        SplitMix64 rng(stream_seed(seed, t));
        std::iota(order.begin(), order.end(), 0);
        for (int k = n - 1; k > 0; --k) {
            const auto r = rng.next_below(static_cast<std::uint32_t>(k + 1));
            std::swap(order[static_cast<std::size_t>(k)], order[r]);
        }
        Mask prefix = 0;
        for (PlayerId p : order) {
            const Mask with = prefix | player_bit(p);
            const double delta = table[with] - table[prefix];
            sum[static_cast<std::size_t>(p)] += delta;
            sum_sq[static_cast<std::size_t>(p)] += delta * delta;
            prefix = with;
        }
    }

    SampledValueVector out;
    out.permutations = permutations;
    out.seed = seed;
    out.estimate.resize(np);
    out.std_error.resize(np);
    const double m = static_cast<double>(permutations);
    for (std::size_t i = 0; i < np; ++i) {
        out.estimate[i] = sum[i] / m;
        if (permutations > 1) {
            const double variance = (sum_sq[i] - sum[i] * sum[i] / m) / (m - 1.0);
            out.std_error[i] = std::sqrt(std::max(variance, 0.0) / m);
        } else {
            out.std_error[i] = 0.0;
        }
    }
    return out;
}

} // namespace coop
