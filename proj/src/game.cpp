#include "coop/game.hpp"

#include <utility>

namespace coop {

Game::Game(int player_count, std::vector<Rational> table, std::vector<std::string> player_names)
    : n_(player_count), table_(std::move(table)), names_(std::move(player_names)) {
    if (n_ < 1 || n_ > kMaxPlayers) {
        throw SizeLimitExceeded("player count " + std::to_string(n_) + " outside [1, " +
                                std::to_string(kMaxPlayers) + "]");
    }
    const std::size_t expected = std::size_t{1} << n_;
    if (table_.size() != expected) {
        throw LengthMismatch("table has " + std::to_string(table_.size()) + " entries, expected " +
                             std::to_string(expected) + " for " + std::to_string(n_) + " players");
    }
    if (table_[0] != 0) {
        throw NonzeroEmptyCoalition("the empty coalition must have worth 0");
    }
    if (!names_.empty() && names_.size() != static_cast<std::size_t>(n_)) {
        throw LengthMismatch("expected " + std::to_string(n_) + " player names, got " +
                    std::to_string(names_.size()));
    }
}

const Rational& Game::value(const Coalition& coalition) const {
    if (coalition.universe_size() != n_) {
        throw InvalidCoalition("coalition universe " + std::to_string(coalition.universe_size()) +
                               " does not match game with " + std::to_string(n_) + " players");
    }
    return table_[coalition.bits()];
}

std::string Game::player_label(PlayerId p) const {
    if (!names_.empty() && p >= 0 && p < n_) {
        return names_[p];
    }
    return std::to_string(p);
}

Game operator+(const Game& a, const Game& b) {
    if (a.n_ != b.n_) {
        throw LengthMismatch("cannot add games with different player counts");
    }
    std::vector<Rational> table(a.table_.size());
    for (std::size_t s = 0; s < table.size(); ++s) {
        table[s] = a.table_[s] + b.table_[s];
    }
    return Game(a.n_, std::move(table), a.names_.empty() ? b.names_ : a.names_);
}

Rational marginal(const Game& g, const Coalition& joining, const Coalition& base) {
    if (!joining.disjoint_from(base)) {
        throw OverlappingArguments("marginal requires disjoint coalitions, got " +
                                   joining.to_string() + " and " + base.to_string());
    }
    return g.value(base.unite(joining)) - g.value(base);
}

Game subgame(const Game& g, const Coalition& within) {
    if (within.universe_size() != g.player_count()) {
        throw InvalidCoalition("subgame coalition universe mismatch");
    }
    const Mask keep = within.bits();
    std::vector<Rational> table(g.table_size());
    for (Mask s = 0; s < table.size(); ++s) {
        table[s] = g.value(s & keep);
    }
    return Game(g.player_count(), std::move(table), g.player_names());
}

Game restrict_to(const Game& g, const Coalition& kept) {
    if (kept.universe_size() != g.player_count()) {
        throw InvalidCoalition("restriction coalition universe mismatch");
    }
    if (kept.is_empty()) {
        throw EmptyRestriction("cannot restrict a game to the empty coalition");
    }
    const std::vector<PlayerId> members = kept.members();
    const int m = static_cast<int>(members.size());
    std::vector<Rational> table(std::size_t{1} << m);
    for (Mask s = 0; s < table.size(); ++s) {
        Mask original = 0;
        for (int k = 0; k < m; ++k) {
            if (s & (Mask{1} << k)) {
                original |= player_bit(members[k]);
            }
        }
        table[s] = g.value(original);
    }
    std::vector<std::string> names;
    if (!g.player_names().empty()) {
        names.reserve(members.size());
        for (PlayerId p : members) {
            names.push_back(g.player_names()[p]);
        }
    }
    return Game(m, std::move(table), std::move(names));
}

std::string SupermodularityWitness::to_string() const {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " S=" + mask_to_string(context);
}

std::optional<SupermodularityWitness> supermodularity_witness(const Game& g) {
    const int n = g.player_count();
    // Pairwise form: dv_i(S u {j}) >= dv_i(S) for all i != j, S avoiding both.
    // The condition is symmetric in i and j, so i < j covers every pair.
    for (PlayerId i = 0; i < n; ++i) {
        for (PlayerId j = i + 1; j < n; ++j) {
            const Mask bi = player_bit(i);
            const Mask bj = player_bit(j);
            const Mask rest = g.full_mask() & ~(bi | bj);
            Mask s = 0;
            while (true) {
                if (g.value(s | bi | bj) + g.value(s) < g.value(s | bi) + g.value(s | bj)) {
                    return SupermodularityWitness{i, j, s};
                }
                if (s == rest) {
                    break;
                }
                s = (s - rest) & rest; // submasks of rest in increasing order
            }
        }
    }
    return std::nullopt;
}

std::string ProductivityWitness::to_string() const {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " S=" + mask_to_string(context);
}

std::optional<ProductivityWitness> disjoint_productivity_witness(const Game& g, const Coalition& a,
                                                                 const Coalition& b) {
    if (!a.disjoint_from(b)) {
        throw OverlappingArguments("disjoint productivity requires disjoint coalitions, got " +
                                   a.to_string() + " and " + b.to_string());
    }
    if (a.universe_size() != g.player_count()) {
        throw InvalidCoalition("coalition universe mismatch");
    }
    for (PlayerId i : a.members()) {
        for (PlayerId j : b.members()) {
            const Mask bi = player_bit(i);
            const Mask bj = player_bit(j);
            const Mask rest = g.full_mask() & ~(bi | bj);
            Mask s = 0;
            while (true) {
                if (g.value(s | bi | bj) - g.value(s | bj) != g.value(s | bi) - g.value(s)) {
                    return ProductivityWitness{i, j, s};
                }
                if (s == rest) {
                    break;
                }
                s = (s - rest) & rest;
            }
        }
    }
    return std::nullopt;
}

bool is_null_player(const Game& g, PlayerId i) {
    if (i < 0 || i >= g.player_count()) {
        throw InvalidCoalition("player " + std::to_string(i) + " outside universe");
    }
    const Mask bi = player_bit(i);
    const Mask rest = g.full_mask() & ~bi;
    Mask s = 0;
    while (true) {
        if (g.value(s | bi) != g.value(s)) {
            return false;
        }
        if (s == rest) {
            return true;
        }
        s = (s - rest) & rest;
    }
}

bool is_invariant_player(const Game& original, const Game& transformed, PlayerId k) {
    if (original.player_count() != transformed.player_count()) {
        throw Error("invariance check requires games over the same universe");
    }
    if (k < 0 || k >= original.player_count()) {
        throw InvalidCoalition("player " + std::to_string(k) + " outside universe");
    }
    const Mask bk = player_bit(k);
    const Mask rest = original.full_mask() & ~bk;
    Mask s = 0;
    while (true) {
        if (original.value(s | bk) != transformed.value(s | bk)) {
            return false;
        }
        if (s == rest) {
            return true;
        }
        s = (s - rest) & rest;
    }
}

} // namespace coop
