#include "coop/coalition.hpp"

#include <bit>
#include <sstream>

namespace coop {

Coalition::Coalition(Mask bits, int universe_size) : bits_(bits), universe_(universe_size) {
    if (universe_size < 0 || universe_size > 31) {
        throw InvalidCoalition("universe size out of range: " + std::to_string(universe_size));
    }
    if (universe_size < 31 && (bits >> universe_size) != 0) {
        throw InvalidCoalition("coalition " + mask_to_string(bits) + " has members outside a universe of " +
                               std::to_string(universe_size) + " players");
    }
}

Coalition Coalition::full(int universe_size) {
    return Coalition((Mask{1} << universe_size) - 1, universe_size);
}

Coalition Coalition::single(PlayerId p, int universe_size) {
    if (p < 0 || p >= universe_size) {
        throw InvalidCoalition("player " + std::to_string(p) + " outside universe of " +
                               std::to_string(universe_size));
    }
    return Coalition(player_bit(p), universe_size);
}

Coalition Coalition::of(std::initializer_list<PlayerId> players, int universe_size) {
    return of(std::vector<PlayerId>(players), universe_size);
}

Coalition Coalition::of(const std::vector<PlayerId>& players, int universe_size) {
    Mask bits = 0;
    for (PlayerId p : players) {
        if (p < 0 || p >= universe_size) {
            throw InvalidCoalition("player " + std::to_string(p) + " outside universe of " +
                                   std::to_string(universe_size));
        }
        bits |= player_bit(p);
    }
    return Coalition(bits, universe_size);
}

int Coalition::size() const {
    return std::popcount(bits_);
}

void Coalition::require_same_universe(const Coalition& other) const {
    if (universe_ != other.universe_) {
        throw InvalidCoalition("coalitions over different universes (" + std::to_string(universe_) +
                               " vs " + std::to_string(other.universe_) + ")");
    }
}

Coalition Coalition::complement() const {
    return Coalition(~bits_ & ((Mask{1} << universe_) - 1), universe_);
}

Coalition Coalition::unite(const Coalition& other) const {
    require_same_universe(other);
    return Coalition(bits_ | other.bits_, universe_);
}

Coalition Coalition::intersect(const Coalition& other) const {
    require_same_universe(other);
    return Coalition(bits_ & other.bits_, universe_);
}

Coalition Coalition::minus(const Coalition& other) const {
    require_same_universe(other);
    return Coalition(bits_ & ~other.bits_, universe_);
}

bool Coalition::disjoint_from(const Coalition& other) const {
    require_same_universe(other);
    return (bits_ & other.bits_) == 0;
}

bool Coalition::subset_of(const Coalition& other) const {
    require_same_universe(other);
    return (bits_ & ~other.bits_) == 0;
}

std::vector<PlayerId> Coalition::members() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int p = 0; p < universe_; ++p) {
        if (bits_ & player_bit(p)) {
            out.push_back(p);
        }
    }
    return out;
}

std::string Coalition::to_string() const {
    return mask_to_string(bits_);
}

std::string mask_to_string(Mask bits) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int p = 0; p < 32; ++p) {
        if (bits & (Mask{1} << p)) {
            if (!first) {
                out << ',';
            }
            out << p;
            first = false;
        }
    }
    out << '}';
    return out.str();
}

Mask parse_mask(const std::string& text, int universe_size) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') {
            throw Error("unbalanced braces in coalition '" + text + "'");
        }
        body = body.substr(1, body.size() - 2);
    }
    Mask bits = 0;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            throw Error("empty player index in coalition '" + text + "'");
        }
        std::size_t used = 0;
        int p = 0;
        try {
            p = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error("bad player index '" + item + "' in coalition '" + text + "'");
        }
        if (used != item.size()) {
            throw Error("bad player index '" + item + "' in coalition '" + text + "'");
        }
        if (p < 0 || p >= universe_size) {
            throw InvalidCoalition("player " + std::to_string(p) + " outside universe of " +
                                   std::to_string(universe_size));
        }
        bits |= player_bit(p);
    }
    return bits;
}

} // namespace coop
