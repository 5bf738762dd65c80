#include "coop/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "coop/rng.hpp"

namespace coop {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (n_ < 1) {
        throw Error("graph needs at least one vertex");
    }
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) {
            throw Error("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") outside vertex range [0," + std::to_string(n_) + ")");
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph Graph::complete(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vertex_count; ++u) {
        for (int v = u + 1; v < vertex_count; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(vertex_count, std::move(edges));
}

Graph Graph::without_edge(int u, int v) const {
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size());
    for (const auto& existing : edges_) {
        if (existing != e) {
            edges.push_back(existing);
        }
    }
    return Graph(n_, std::move(edges));
}

Game homogeneous_block(int player_count) {
    std::vector<Rational> table(std::size_t{1} << player_count);
    for (Mask s = 1; s < table.size(); ++s) {
        table[s] = std::popcount(s) - 1;
    }
    return Game(player_count, std::move(table));
}

Game heterogeneous_block(int player_count, PlayerId special) {
    if (player_count < 2) {
        throw Error("heterogeneous block needs the special player and at least one other");
    }
    if (special < 0 || special >= player_count) {
        throw InvalidCoalition("special player " + std::to_string(special) +
                               " outside universe of " + std::to_string(player_count));
    }
    const Mask bx = player_bit(special);
    std::vector<Rational> table(std::size_t{1} << player_count);
    for (Mask s = 1; s < table.size(); ++s) {
        const int base = std::popcount(s) - 1;
        table[s] = (s & bx) ? 3 * base : base;
    }
    std::vector<std::string> names(static_cast<std::size_t>(player_count));
    for (int p = 0; p < player_count; ++p) {
        names[static_cast<std::size_t>(p)] = p == special ? "x" : "p" + std::to_string(p);
    }
    return Game(player_count, std::move(table), std::move(names));
}

ThreeBlockLayout three_block_layout(int block_size) {
    if (block_size < 1) {
        throw Error("block size must be at least 1");
    }
    const int n = block_size;
    const int players = 3 * n;
    const Mask block = (Mask{1} << n) - 1;
    return ThreeBlockLayout{
        n,
        Coalition(block, players),
        Coalition(block << n, players),
        Coalition(block << (2 * n), players),
        0,
        n,
        2 * n,
    };
}

Game three_block(int block_size) {
    const ThreeBlockLayout layout = three_block_layout(block_size);
    const int players = 3 * block_size;
    if (players > kMaxPlayers) {
        throw SizeLimitExceeded("three_block(" + std::to_string(block_size) + ") needs " +
                                std::to_string(players) + " players");
    }
    const Mask key_i = player_bit(layout.key_i);
    const Mask key_j = player_bit(layout.key_j);
    const Mask key_k = player_bit(layout.key_k);
    const Mask blocks[3] = {layout.block_i.bits(), layout.block_j.bits(), layout.block_k.bits()};

    std::vector<Rational> table(std::size_t{1} << players);
    for (Mask s = 1; s < table.size(); ++s) {
        const int size = std::popcount(s);
        const bool has_i = (s & key_i) != 0;
        const bool has_j = (s & key_j) != 0;
        const bool has_k = (s & key_k) != 0;
        const int keys = int(has_i) + int(has_j) + int(has_k);
        if (keys < 2) {
            table[s] = size;
        } else if (keys == 3) {
            table[s] = 3 * size;
        } else {
            // Exactly two key players: their blocks trade at double value.
            int bonus = 0;
            if (has_i && has_j) {
                bonus = std::popcount(s & blocks[0]) + std::popcount(s & blocks[1]);
            } else if (has_i && has_k) {
                bonus = std::popcount(s & blocks[0]) + std::popcount(s & blocks[2]);
            } else {
                bonus = std::popcount(s & blocks[1]) + std::popcount(s & blocks[2]);
            }
            table[s] = size + bonus;
        }
    }

    std::vector<std::string> names(static_cast<std::size_t>(players));
    const char* tags[3] = {"I", "J", "K"};
    const char* keys[3] = {"i", "j", "k"};
    for (int b = 0; b < 3; ++b) {
        for (int p = 0; p < block_size; ++p) {
            const std::size_t index = static_cast<std::size_t>(b * block_size + p);
            names[index] = p == 0 ? keys[b] : tags[b] + std::to_string(p + 1);
        }
    }
    return Game(players, std::move(table), std::move(names));
}

Game triangle_example() {
    std::vector<Rational> table(8);
    for (Mask s = 1; s < 8; ++s) {
        table[s] = 6 * (std::popcount(s) - 1);
    }
    return Game(3, std::move(table), {"1", "2", "3"});
}

Game myerson_restriction(const Game& base, const Graph& graph) {
    if (graph.vertex_count() != base.player_count()) {
        throw Error("graph vertex count does not match the game's player count");
    }
    const int n = base.player_count();

    // Adjacency masks for component search.
    std::vector<Mask> adjacency(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : graph.edges()) {
        adjacency[static_cast<std::size_t>(u)] |= player_bit(v);
        adjacency[static_cast<std::size_t>(v)] |= player_bit(u);
    }

    std::vector<Rational> table(base.table_size());
    for (Mask s = 1; s < table.size(); ++s) {
        Rational worth = 0;
        Mask remaining = s;
        while (remaining != 0) {
            // Flood-fill the component of the lowest remaining player.
            Mask component = remaining & (~remaining + 1);
            while (true) {
                Mask grown = component;
                Mask frontier = component;
                while (frontier != 0) {
                    const int p = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= adjacency[static_cast<std::size_t>(p)] & s;
                }
                if (grown == component) {
                    break;
                }
                component = grown;
            }
            worth += base.value(component);
            remaining &= ~component;
        }
        table[s] = std::move(worth);
    }
    return Game(n, std::move(table), base.player_names());
}

namespace {

Rational random_small_rational(SplitMix64& rng, std::int64_t lo, std::int64_t hi,
                               std::int64_t max_den) {
    const BigInt num = rng.next_in(lo, hi);
    const BigInt den = rng.next_in(1, max_den);
    return make_rational(num, den);
}

} // namespace

Game random_convex(int player_count, std::uint64_t seed) {
    SplitMix64 rng(stream_seed(seed, 0x636f6e76)); // family-tagged stream
    const std::size_t size = std::size_t{1} << player_count;
    std::vector<Rational> dividends(size);
    for (Mask t = 1; t < size; ++t) {
        if (std::popcount(t) == 1) {
            dividends[t] = random_small_rational(rng, -6, 9, 3);
        } else {
            // Nonnegative dividends on multi-player coalitions make the
            // synthesized game supermodular.
            dividends[t] = random_small_rational(rng, 0, 9, 3);
        }
    }

    // Subset zeta transform: v(S) = sum of dividends over subsets of S.
    std::vector<Rational> table = std::move(dividends);
    for (int p = 0; p < player_count; ++p) {
        const Mask bp = player_bit(p);
        for (Mask s = 0; s < size; ++s) {
            if (s & bp) {
                table[s] += table[s & ~bp];
            }
        }
    }

    Game g(player_count, std::move(table));
    if (auto w = supermodularity_witness(g)) {
        // Unreachable for nonnegative multi-player dividends.
        throw Error("random_convex produced a non-supermodular game: " + w->to_string());
    }
    return g;
}

Game random_game(int player_count, std::uint64_t seed) {
    SplitMix64 rng(stream_seed(seed, 0x616e79)); // family-tagged stream
    const std::size_t size = std::size_t{1} << player_count;
    std::vector<Rational> table(size);
    for (Mask s = 1; s < size; ++s) {
        table[s] = random_small_rational(rng, -12, 12, 4);
    }
    return Game(player_count, std::move(table));
}

const char* family_name(Family family) {
    switch (family) {
    case Family::homogeneous:
        return "homogeneous";
    case Family::heterogeneous:
        return "heterogeneous";
    case Family::three_block:
        return "three_block";
    case Family::triangle:
        return "triangle";
    case Family::myerson:
        return "myerson";
    case Family::random_convex:
        return "random_convex";
    case Family::random_any:
        return "random_any";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> known[] = {
        {"homogeneous", Family::homogeneous},   {"heterogeneous", Family::heterogeneous},
        {"three_block", Family::three_block},   {"triangle", Family::triangle},
        {"myerson", Family::myerson},           {"random_convex", Family::random_convex},
        {"random_any", Family::random_any},
    };
    for (const auto& [text, family] : known) {
        if (name == text) {
            return family;
        }
    }
    return std::nullopt;
}

std::string ScenarioSpec::to_string() const {
    std::ostringstream out;
    out << family_name(family);
    switch (family) {
    case Family::homogeneous:
    case Family::three_block:
        out << "(n=" << n << ")";
        break;
    case Family::heterogeneous:
        out << "(n=" << n << ", x=" << special << ")";
        break;
    case Family::triangle:
        break;
    case Family::myerson:
        out << "(base, graph)";
        break;
    case Family::random_convex:
    case Family::random_any:
        out << "(n=" << n << ", seed=" << seed << ")";
        break;
    }
    return out.str();
}

Game instantiate(const ScenarioSpec& spec) {
    switch (spec.family) {
    case Family::homogeneous:
        return homogeneous_block(spec.n);
    case Family::heterogeneous:
        return heterogeneous_block(spec.n, spec.special);
    case Family::three_block:
        return three_block(spec.n);
    case Family::triangle:
        return triangle_example();
    case Family::myerson:
        if (!spec.base || !spec.graph) {
            throw Error("myerson spec needs a base game and a graph");
        }
        return myerson_restriction(*spec.base, *spec.graph);
    case Family::random_convex:
        return random_convex(spec.n, spec.seed);
    case Family::random_any:
        return random_game(spec.n, spec.seed);
    }
    throw Error("unknown family");
}

} // namespace coop
