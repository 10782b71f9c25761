#pragma once

#include <string>

#include "prym/cover.hpp"

namespace prym {

// On-disk presentation of a cover:
// {
//   "schemaVersion": 1,
//   "vertices": [{"id": "u", "dilated": false}, ...],
//   "edges": [{"id": "e1", "ends": ["u", "w"], "length": "3/2",
//              "dilated": false, "sign": -1}, ...]
// }
// "sign" is required exactly for free edges (both ends undilated, edge not
// dilated); "dilated" defaults to false; lengths are rational strings.
inline constexpr int kSchemaVersion = 1;

// Parses and fully validates a document; throws CoverError with element
// context on any violation.
DoubleCover parse_cover_document(const std::string& json_text);

DoubleCover load_cover_file(const std::string& path);

// Deterministic serialization (vertices and edges in stored order).
std::string serialize_cover_document(const DoubleCover& c);

void write_cover_file(const DoubleCover& c, const std::string& path);

}  // namespace prym
