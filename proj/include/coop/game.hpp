#ifndef COOP_GAME_HPP
#define COOP_GAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/rational.hpp"

namespace coop {

/// Dense-table limit: 2^20 rationals is the largest characteristic function
/// this library stores explicitly.
inline constexpr int kMaxPlayers = 20;

/// A transferable-utility game: a player count n and the worth of every one
/// of the 2^n coalitions, indexed by bitmask. Immutable after construction;
/// every operation on games is a pure function.
class Game {
public:
    /// Requires table.size() == 2^n, table[0] == 0 and 1 <= n <= 20.
    /// Throws LengthMismatch, NonzeroEmptyCoalition or SizeLimitExceeded.
    Game(int player_count, std::vector<Rational> table,
         std::vector<std::string> player_names = {});

    int player_count() const { return n_; }
    Mask full_mask() const { return (Mask{1} << n_) - 1; }
    std::size_t table_size() const { return table_.size(); }

    const Rational& value(Mask coalition) const { return table_[coalition]; }
    const Rational& value(const Coalition& coalition) const;
    const Rational& grand_value() const { return table_.back(); }
    const std::vector<Rational>& table() const { return table_; }

    /// Optional presentation names; empty when the game is anonymous.
    const std::vector<std::string>& player_names() const { return names_; }
    std::string player_label(PlayerId p) const;

    Coalition coalition(Mask bits) const { return Coalition(bits, n_); }

    /// Per-coalition sum of two games over the same universe.
    friend Game operator+(const Game& a, const Game& b);

    /// Equality of player count and table; names are presentation only.
    friend bool operator==(const Game& a, const Game& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    int n_;
    std::vector<Rational> table_;
    std::vector<std::string> names_;
};

/// Marginal contribution of coalition C to coalition S: v(S u C) - v(S).
/// Throws OverlappingArguments unless C and S are disjoint.
Rational marginal(const Game& g, const Coalition& joining, const Coalition& base);

/// The subgame on C: same universe, worth v(S n C). Every player outside C
/// is a null player of the result.
Game subgame(const Game& g, const Coalition& within);

/// The game induced on the members of C, reindexed in ascending original
/// order. Throws EmptyRestriction when C is empty.
Game restrict_to(const Game& g, const Coalition& kept);

/// Witness of a supermodularity violation: players i < j and a context S
/// disjoint from both with dv_i(S u {j}) < dv_i(S).
struct SupermodularityWitness {
    PlayerId i;
    PlayerId j;
    Mask context;
    std::string to_string() const;
};

/// Checks the pairwise increasing-marginals characterization of
/// supermodularity. Returns the lexicographically smallest witness
/// (i, then j, then bitmask order of S), or nullopt when the game is
/// supermodular.
std::optional<SupermodularityWitness> supermodularity_witness(const Game& g);

inline bool is_supermodular(const Game& g) { return !supermodularity_witness(g).has_value(); }

/// Witness that players i in A and j in B are not disjointly productive:
/// v(S u {i,j}) - v(S u {j}) != v(S u {i}) - v(S) for the reported context.
struct ProductivityWitness {
    PlayerId i;
    PlayerId j;
    Mask context;
    std::string to_string() const;
};

/// Checks whether every i in A and j in B are disjointly productive.
/// A and B must be disjoint (OverlappingArguments otherwise). Vacuously true
/// when either side is empty. Witness order: i ascending in A, j ascending
/// in B, context in bitmask order.
std::optional<ProductivityWitness> disjoint_productivity_witness(const Game& g,
                                                                 const Coalition& a,
                                                                 const Coalition& b);

inline bool are_disjointly_productive(const Game& g, const Coalition& a, const Coalition& b) {
    return !disjoint_productivity_witness(g, a, b).has_value();
}

/// True iff dv_i(S) = 0 for every S not containing i.
bool is_null_player(const Game& g, PlayerId i);

/// True iff the transformed game agrees with the original on every coalition
/// containing k. Both games must share the same universe.
bool is_invariant_player(const Game& original, const Game& transformed, PlayerId k);

} // namespace coop

#endif // COOP_GAME_HPP
