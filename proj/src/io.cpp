#include "coop/io.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <memory>
#include <sstream>

#include "json.hpp"

#include "coop/errors.hpp"

namespace coop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& message) {
    throw Error(source + ": " + message);
}

json parse_stream(std::istream& in, const std::string& source) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(source, std::string("invalid JSON: ") + e.what());
    }
}

void require_object(const json& doc, const std::string& source) {
    if (!doc.is_object()) {
        fail(source, "document must be a JSON object");
    }
}

void require_format(const json& doc, const char* expected, const std::string& source) {
    if (!doc.contains("format") || !doc["format"].is_string() ||
        doc["format"].get<std::string>() != expected) {
        fail(source, std::string("missing or wrong \"format\", expected \"") + expected + "\"");
    }
}

void reject_unknown_keys(const json& doc, std::initializer_list<const char*> known,
                         const std::string& source) {
    for (const auto& item : doc.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            fail(source, "unknown key \"" + item.key() + "\"");
        }
    }
}

Rational value_from_json(const json& cell, const std::string& source, std::size_t index) {
    const std::string where = "values[" + std::to_string(index) + "]";
    if (cell.is_number_integer()) {
        if (cell.is_number_unsigned()) {
            return Rational(BigInt(cell.get<std::uint64_t>()));
        }
        return Rational(BigInt(cell.get<std::int64_t>()));
    }
    if (cell.is_string()) {
        try {
            return parse_rational(cell.get<std::string>());
        } catch (const Error& e) {
            fail(source, where + ": " + e.what());
        }
    }
    fail(source, where + " must be an integer or a \"p/q\" string");
}

std::vector<std::string> names_from_json(const json& doc, const std::string& source) {
    std::vector<std::string> names;
    if (!doc.contains("players")) {
        return names;
    }
    const json& arr = doc["players"];
    if (!arr.is_array()) {
        fail(source, "\"players\" must be an array of strings");
    }
    for (const json& cell : arr) {
        if (!cell.is_string()) {
            fail(source, "\"players\" must be an array of strings");
        }
        names.push_back(cell.get<std::string>());
    }
    return names;
}

Game game_from_json(const json& doc, const std::string& source);
Graph graph_from_json(const json& doc, const std::string& source);

int int_field(const json& doc, const char* key, const std::string& source) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        fail(source, std::string("generator needs an integer \"") + key + "\"");
    }
    return doc[key].get<int>();
}

Game game_from_generator(const json& gen, const std::string& source) {
    if (!gen.is_object()) {
        fail(source, "\"generator\" must be an object");
    }
    if (!gen.contains("family") || !gen["family"].is_string()) {
        fail(source, "generator needs a \"family\" string");
    }
    const std::string family_text = gen["family"].get<std::string>();
    const auto family = family_from_name(family_text);
    if (!family) {
        fail(source, "unknown generator family \"" + family_text + "\"");
    }

    ScenarioSpec spec;
    spec.family = *family;
    switch (*family) {
    case Family::triangle:
        reject_unknown_keys(gen, {"family"}, source);
        break;
    case Family::homogeneous:
    case Family::three_block:
        reject_unknown_keys(gen, {"family", "n"}, source);
        spec.n = int_field(gen, "n", source);
        break;
    case Family::heterogeneous:
        reject_unknown_keys(gen, {"family", "n", "special"}, source);
        spec.n = int_field(gen, "n", source);
        spec.special = gen.contains("special") ? int_field(gen, "special", source) : 0;
        break;
    case Family::random_convex:
    case Family::random_any:
        reject_unknown_keys(gen, {"family", "n", "seed"}, source);
        spec.n = int_field(gen, "n", source);
        if (gen.contains("seed")) {
            if (!gen["seed"].is_number_unsigned()) {
                fail(source, "generator \"seed\" must be a nonnegative integer");
            }
            spec.seed = gen["seed"].get<std::uint64_t>();
        }
        break;
    case Family::myerson:
        reject_unknown_keys(gen, {"family", "base", "graph"}, source);
        if (!gen.contains("base") || !gen.contains("graph")) {
            fail(source, "myerson generator needs \"base\" and \"graph\" documents");
        }
        spec.base = std::make_shared<Game>(game_from_json(gen["base"], source + " (base)"));
        spec.graph = std::make_shared<Graph>(graph_from_json(gen["graph"], source + " (graph)"));
        spec.n = spec.base->player_count();
        break;
    }
    return instantiate(spec);
}

Game game_from_json(const json& doc, const std::string& source) {
    require_object(doc, source);
    require_format(doc, "game/1", source);
    reject_unknown_keys(doc, {"format", "players", "values", "generator"}, source);

    const bool has_values = doc.contains("values");
    const bool has_generator = doc.contains("generator");
    if (has_values == has_generator) {
        fail(source, "exactly one of \"values\" or \"generator\" is required");
    }

    std::vector<std::string> names = names_from_json(doc, source);
    if (has_generator) {
        Game g = game_from_generator(doc["generator"], source);
        if (names.empty()) {
            return g;
        }
        return Game(g.player_count(), g.table(), std::move(names));
    }

    const json& arr = doc["values"];
    if (!arr.is_array() || arr.empty()) {
        fail(source, "\"values\" must be a nonempty array");
    }
    const std::size_t size = arr.size();
    if (!std::has_single_bit(size)) {
        fail(source, "\"values\" length must be a power of two, got " + std::to_string(size));
    }
    const int n = std::countr_zero(size);
    if (n < 1 || n > kMaxPlayers) {
        throw SizeLimitExceeded(source + ": table for " + std::to_string(n) +
                                " players is outside the supported range [1, " +
                                std::to_string(kMaxPlayers) + "]");
    }
    std::vector<Rational> table;
    table.reserve(size);
    for (std::size_t s = 0; s < size; ++s) {
        table.push_back(value_from_json(arr[s], source, s));
    }
    if (!names.empty() && names.size() != static_cast<std::size_t>(n)) {
        fail(source, "\"players\" has " + std::to_string(names.size()) + " entries for a " +
                         std::to_string(n) + "-player table");
    }
    try {
        return Game(n, std::move(table), std::move(names));
    } catch (const Error& e) {
        fail(source, e.what());
    }
}

Graph graph_from_json(const json& doc, const std::string& source) {
    require_object(doc, source);
    require_format(doc, "graph/1", source);
    reject_unknown_keys(doc, {"format", "n", "edges"}, source);
    const int n = int_field(doc, "n", source);
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        const json& arr = doc["edges"];
        if (!arr.is_array()) {
            fail(source, "\"edges\" must be an array of [u, v] pairs");
        }
        for (const json& cell : arr) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
                !cell[1].is_number_integer()) {
                fail(source, "\"edges\" must be an array of [u, v] pairs");
            }
            edges.emplace_back(cell[0].get<int>(), cell[1].get<int>());
        }
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& e) {
        fail(source, e.what());
    }
}

json value_to_json(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    // Integers that fit a double-safe range stay JSON numbers; everything
    // else is the canonical fraction string.
    static const BigInt kSafe = BigInt(1) << 53;
    if (den == 1 && num > -kSafe && num < kSafe) {
        return json(num.convert_to<std::int64_t>());
    }
    return json(to_fraction_string(value));
}

} // namespace

Game read_game_document(std::istream& in, const std::string& source_name) {
    return game_from_json(parse_stream(in, source_name), source_name);
}

Game load_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(path + ": cannot open file");
    }
    return read_game_document(in, path);
}

std::string write_game_document(const Game& g) {
    json doc;
    doc["format"] = "game/1";
    if (!g.player_names().empty()) {
        doc["players"] = g.player_names();
    }
    json values = json::array();
    for (const Rational& v : g.table()) {
        values.push_back(value_to_json(v));
    }
    doc["values"] = std::move(values);
    return doc.dump(2) + "\n";
}

Graph read_graph_document(std::istream& in, const std::string& source_name) {
    return graph_from_json(parse_stream(in, source_name), source_name);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(path + ": cannot open file");
    }
    return read_graph_document(in, path);
}

std::string write_graph_document(const Graph& g) {
    json doc;
    doc["format"] = "graph/1";
    doc["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(json::array({u, v}));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) {
        return "";
    }
    std::size_t columns = 0;
    for (const auto& row : rows) {
        columns = std::max(columns, row.size());
    }
    std::vector<std::size_t> widths(columns, 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(widths[c] - row[c].size(), ' ');
            }
        }
        out << line << '\n';
        if (r == 0) {
            std::string rule;
            for (std::size_t c = 0; c < columns; ++c) {
                if (c > 0) {
                    rule += "  ";
                }
                rule.append(widths[c], '-');
            }
            out << rule << '\n';
        }
    }
    return out.str();
}

std::string format_csv(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out << ',';
            }
            const std::string& cell = row[c];
            if (cell.find_first_of(",\"\n") != std::string::npos) {
                out << '"';
                for (char ch : cell) {
                    if (ch == '"') {
                        out << '"';
                    }
                    out << ch;
                }
                out << '"';
            } else {
                out << cell;
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace coop
