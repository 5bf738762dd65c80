#ifndef COOP_IO_HPP
#define COOP_IO_HPP

#include <iosfwd>
#include <string>

#include "coop/game.hpp"
#include "coop/generators.hpp"

namespace coop {

/// Game documents are UTF-8 JSON with either an explicit dense value table
/// (index = coalition bitmask, bit t = player t, entries "p/q" or integer)
/// or a generator clause naming a family and its parameters:
///
///   {"format": "game/1", "players": ["1","2","3"],
///    "values": [0, "0", 0, 6, 0, "6", 6, 12]}
///   {"format": "game/1", "generator": {"family": "three_block", "n": 2}}
///
/// Exactly one of "values" / "generator" must be present and values[0] must
/// be zero. Rational values round-trip exactly: canonical "p/q" in equals
/// canonical "p/q" out.
Game read_game_document(std::istream& in, const std::string& source_name = "<game>");
Game load_game_file(const std::string& path);

/// Serializes the explicit table form (generator clauses are resolved on
/// read and written back as tables).
std::string write_game_document(const Game& g);

/// Graph documents: {"format": "graph/1", "n": 3, "edges": [[0,1],[1,2]]}.
Graph read_graph_document(std::istream& in, const std::string& source_name = "<graph>");
Graph load_graph_file(const std::string& path);
std::string write_graph_document(const Graph& g);

/// Plain-text table with aligned columns; rows of cells, first row = header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);
std::string format_csv(const std::vector<std::vector<std::string>>& rows);

} // namespace coop

#endif // COOP_IO_HPP
