#ifndef COOP_GENERATORS_HPP
#define COOP_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coop/game.hpp"

namespace coop {

/// Undirected communication graph on [0, n) without self-loops.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

    /// The graph with every vertex pair connected.
    static Graph complete(int vertex_count);

    /// This graph with one edge removed (no-op when the edge is absent).
    Graph without_edge(int u, int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_; // stored with u < v, deduplicated
};

// --- Named game families -------------------------------------------------

/// Single trade block: v(S) = |S| - 1 for nonempty S, v(empty) = 0.
/// Shapley value 1 - 1/n for every player. Supermodular.
Game homogeneous_block(int player_count);

/// Trade block with one special player x:
/// v(S) = |S| - 1 without x, 3(|S| - 1) with x, v(empty) = 0.
/// Shapley value n - 1/n for x and 2 - 1/n for the others. Supermodular.
Game heterogeneous_block(int player_count, PlayerId special);

/// Three trade blocks I, J, K of equal size n, players indexed
/// I = [0, n), J = [n, 2n), K = [2n, 3n). The lowest index of each block is
/// its key player. Worth |S| with fewer than two key players present; with
/// exactly two key players from blocks X and Y it is |S| + |SnX| + |SnY|;
/// with all three it is 3|S|. v(N) = 9n.
Game three_block(int block_size);

/// Key players of three_block(n): the lowest index of each block.
struct ThreeBlockLayout {
    int block_size;
    Coalition block_i;
    Coalition block_j;
    Coalition block_k;
    PlayerId key_i;
    PlayerId key_j;
    PlayerId key_k;
};
ThreeBlockLayout three_block_layout(int block_size);

/// The fixed 3-player game with v = 6(|S| - 1): 0 on singletons, 6 on pairs,
/// 12 on the grand coalition. Players are named "1", "2", "3".
Game triangle_example();

/// Myerson restriction of a base game by a communication graph: the worth of
/// S is the sum of base values over the connected components of the subgraph
/// induced by S.
Game myerson_restriction(const Game& base, const Graph& graph);

/// Random convex game: nonnegative Harsanyi dividends on every coalition of
/// size >= 2, arbitrary dividends on singletons, synthesized through the
/// subset zeta transform. The result is checked supermodular before being
/// returned. Deterministic in (player_count, seed).
Game random_convex(int player_count, std::uint64_t seed);

/// Random game with bounded rational values and v(empty) = 0; no structure
/// guaranteed. Deterministic in (player_count, seed).
Game random_game(int player_count, std::uint64_t seed);

// --- Declarative scenario description ------------------------------------

enum class Family {
    homogeneous,
    heterogeneous,
    three_block,
    triangle,
    myerson,
    random_convex,
    random_any,
};

const char* family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

/// Serializable description of a generated game. Which fields apply depends
/// on the family: n (players, or block size for three_block), special player
/// x, seed, and for myerson a base game plus graph.
struct ScenarioSpec {
    Family family = Family::triangle;
    int n = 0;
    PlayerId special = 0;
    std::uint64_t seed = 0;
    std::shared_ptr<const Game> base;   // myerson only
    std::shared_ptr<const Graph> graph; // myerson only

    std::string to_string() const;
};

/// Instantiates the described game. Throws Error when parameters are
/// inconsistent with the family.
Game instantiate(const ScenarioSpec& spec);

} // namespace coop

#endif // COOP_GENERATORS_HPP
