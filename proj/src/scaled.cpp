#include "coop/detail/scaled.hpp"

#include <bit>

namespace coop::detail {

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

std::vector<BigInt> shapley_weights(int player_count) {
    std::vector<BigInt> w(static_cast<std::size_t>(player_count));
    for (int s = 0; s < player_count; ++s) {
        w[static_cast<std::size_t>(s)] = factorial(s) * factorial(player_count - 1 - s);
    }
    return w;
}

ScaledTable scale_table(const Game& g) {
    ScaledTable out;
    out.den = 1;
    const auto& table = g.table();
    for (const Rational& v : table) {
        const BigInt& d = denominator(v);
        out.den = lcm(out.den, d);
    }
    out.nums.resize(table.size());
    for (std::size_t s = 0; s < table.size(); ++s) {
        out.nums[s] = numerator(table[s]) * (out.den / denominator(table[s]));
    }
    return out;
}

void boycott_nums(const ScaledTable& base, Mask a, Mask b, std::vector<BigInt>& out) {
    const Mask both = a | b;
    out.resize(base.nums.size());
    for (Mask s = 0; s < out.size(); ++s) {
        out[s] = base.nums[s & ~a] + base.nums[s & ~b] - base.nums[s & ~both];
    }
}

void subgame_nums(const ScaledTable& base, Mask within, std::vector<BigInt>& out) {
    out.resize(base.nums.size());
    for (Mask s = 0; s < out.size(); ++s) {
        out[s] = base.nums[s & within];
    }
}

std::vector<Rational> shapley_from_nums(const std::vector<BigInt>& nums, const BigInt& den,
                                        int player_count) {
    const int n = player_count;
    const std::vector<BigInt> weights = shapley_weights(n);
    std::vector<BigInt> acc(static_cast<std::size_t>(n), BigInt(0));
    const Mask size = static_cast<Mask>(nums.size());
    for (Mask s = 0; s < size; ++s) {
        const BigInt& w = weights[static_cast<std::size_t>(std::popcount(s))];
        for (PlayerId i = 0; i < n; ++i) {
            const Mask bi = player_bit(i);
            if (s & bi) {
                continue;
            }
            acc[static_cast<std::size_t>(i)] += w * (nums[s | bi] - nums[s]);
        }
    }
    const BigInt scale = factorial(n) * den;
    std::vector<Rational> phi(static_cast<std::size_t>(n));
    for (PlayerId i = 0; i < n; ++i) {
        phi[static_cast<std::size_t>(i)] = Rational(acc[static_cast<std::size_t>(i)], scale);
    }
    return phi;
}

} // namespace coop::detail
