#ifndef COOP_COALITION_HPP
#define COOP_COALITION_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coop/errors.hpp"

namespace coop {

/// Bitmask over players: bit p set means player p is in the coalition.
using Mask = std::uint32_t;

/// Identifies players by their 0-based index within a game's universe.
using PlayerId = int;

inline Mask player_bit(PlayerId p) { return Mask{1} << p; }

/// A subset of the player universe, carried together with the universe size
/// so that complements and validity checks are well defined.
class Coalition {
public:
    Coalition(Mask bits, int universe_size);

    static Coalition empty(int universe_size) { return Coalition(0, universe_size); }
    static Coalition full(int universe_size);
    static Coalition single(PlayerId p, int universe_size);
    static Coalition of(std::initializer_list<PlayerId> players, int universe_size);
    static Coalition of(const std::vector<PlayerId>& players, int universe_size);

    Mask bits() const { return bits_; }
    int universe_size() const { return universe_; }
    int size() const;
    bool is_empty() const { return bits_ == 0; }
    bool contains(PlayerId p) const { return p >= 0 && p < universe_ && (bits_ & player_bit(p)); }

    Coalition complement() const;
    Coalition unite(const Coalition& other) const;
    Coalition intersect(const Coalition& other) const;
    Coalition minus(const Coalition& other) const;
    bool disjoint_from(const Coalition& other) const;
    bool subset_of(const Coalition& other) const;

    /// Members in ascending index order.
    std::vector<PlayerId> members() const;

    /// "{0,2,3}" or "{}" for the empty coalition.
    std::string to_string() const;

    friend bool operator==(const Coalition& a, const Coalition& b) {
        return a.bits_ == b.bits_ && a.universe_ == b.universe_;
    }

private:
    void require_same_universe(const Coalition& other) const;

    Mask bits_;
    int universe_;
};

/// Formats a raw mask as "{0,2,3}". Used for witnesses and reports.
std::string mask_to_string(Mask bits);

/// Parses "{0,2,3}", "0,2,3" or "{}" into a mask, validating indices
/// against the universe size.
Mask parse_mask(const std::string& text, int universe_size);

} // namespace coop

#endif // COOP_COALITION_HPP
