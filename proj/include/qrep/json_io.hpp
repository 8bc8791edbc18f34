#pragma once

#include <json.hpp>

#include "qrep/tilt.hpp"

namespace qrep {

// {"field": ..., "dims": [...], "arrows": [{label, rows, cols, entries}]}
// with every entry the exact decimal/fraction string of the scalar, arrows in
// quiver order, entries row-major. Round trips bit-exactly.
nlohmann::json rep_to_json(const Representation& m);

// Inverse of rep_to_json over the given algebra; arrows are matched by
// label. ParseError on any schema or shape violation.
Representation rep_from_json(const nlohmann::json& j, const AlgebraPtr& alg);

// rep_to_json plus a provenance block (input id, tilting id, the summand
// realized at each vertex, and each hom-space dimension).
nlohmann::json functor_output_to_json(const FunctorOutput& out);

}  // namespace qrep
