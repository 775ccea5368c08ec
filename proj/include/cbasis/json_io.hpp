#pragma once

// JSON documents for quivers, triangulations, labellings, bases,
// type-D structures, verification reports and dimension vectors.
// Vertex ids are 0-based; labels are 1-based.

#include <optional>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "cbasis/companion.hpp"
#include "cbasis/quiver.hpp"
#include "cbasis/type_a.hpp"
#include "cbasis/type_d.hpp"

namespace cbasis {

using Json = nlohmann::json;

/// Malformed or invalid input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "arrows": [[src, dst], ...]}, arrows sorted.
Json quiver_to_json(const Quiver& q);
/// Rejects parallel arrows and 2-cycles when simply_laced is set.
Quiver quiver_from_json(const Json& j, bool simply_laced = true);

/// {"polygon_size": int, "diagonals": [[i, j], ...]}
Triangulation triangulation_from_json(const Json& j);
Json triangulation_to_json(const Triangulation& t);

/// {"labels": [label of vertex 0, ...], "strings": [[v, ...], ...],
///  "choices": [[start, finish], ...]}
Json labelling_to_json(const Labelling& l);

/// {"type": {"family", "rank"}, "basis": [[...], ...]}. Rows follow vertex
/// ids, or labels when a labelling is given, in which case "labels" is
/// written as well.
Json basis_to_json(const CompanionBasis& b, const Labelling* l = nullptr);
CompanionBasis basis_from_json(const Json& j);

Json structure_to_json(const TypeDStructure& s);

/// "ok" or {"check", "pair", "expected", "got", "message"}.
Json verification_to_json(const std::optional<VerificationFailure>& f);

/// Sorted list of integer arrays.
Json vectors_to_json(const std::set<DimensionVector>& vs);

/// Parses text, mapping parse errors to FormatError.
Json parse_json(const std::string& text);

}  // namespace cbasis
