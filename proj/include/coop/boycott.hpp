#ifndef COOP_BOYCOTT_HPP
#define COOP_BOYCOTT_HPP

#include <optional>
#include <string>

#include "coop/game.hpp"

namespace coop {

/// A pair of disjoint coalitions: A stops cooperating with B. Either side may
/// be empty, in which case the transform leaves the game unchanged.
struct BoycottSpec {
    Coalition boycotters; // A
    Coalition boycotted;  // B

    BoycottSpec(Coalition a, Coalition b);

    static BoycottSpec one_on_one(PlayerId i, PlayerId j, int universe_size);

    Mask participants() const { return boycotters.bits() | boycotted.bits(); }
    std::string to_string() const;
};

/// Constructs the boycott game as the subgame sum
///   v_comp(A) + v_comp(B) - v_comp(A u B),
/// i.e. result(S) = v(S \ A) + v(S \ B) - v(S \ (A u B)).
/// A coalition missing A or B entirely keeps its original worth, and A and B
/// are disjointly productive in the result.
Game boycott(const Game& g, const BoycottSpec& spec);

/// Verifies the three defining properties of a constructed boycott game:
///   1. agreement with v wherever S misses A or B,
///   2. disjoint productivity of A and B in the result,
///   3. the decomposition result(S u A' u B') = v(S u A') + v(S u B') - v(S)
///      for S disjoint from A u B, A' within A, B' within B.
/// Returns a description of the first failure, or nullopt when all hold.
/// Test and harness oracle; boycott() itself always satisfies these.
std::optional<std::string> boycott_construction_defect(const Game& g,
                                                       const BoycottSpec& spec,
                                                       const Game& result);

/// Smallest coalition (in bitmask order) where lhs(S) < rhs(S), or nullopt
/// when lhs dominates rhs pointwise. Both games must share the universe.
std::optional<Mask> dominance_witness(const Game& lhs, const Game& rhs);

inline bool dominates(const Game& lhs, const Game& rhs) {
    return !dominance_witness(lhs, rhs).has_value();
}

} // namespace coop

#endif // COOP_BOYCOTT_HPP
