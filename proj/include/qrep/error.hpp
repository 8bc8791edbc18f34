#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing scalars or matrices over different fields (Q vs F_p, or distinct p).
struct FieldMismatch : Error {
  using Error::Error;
};

// Rejected family/type/parameter combination.
struct UnsupportedType : Error {
  using Error::Error;
};

// Operation applied to an algebra of the wrong kind (e.g. Ext computation on
// an algebra with a relation, rank on a plain path algebra).
struct UnsupportedAlgebra : Error {
  using Error::Error;
};

// Tilting data does not fit the target quiver (missing generator, bad vertex map).
struct TiltingMismatch : Error {
  using Error::Error;
};

// A solvable-by-construction step failed; indicates a bug, not bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Malformed serialized input (JSON import, scalar strings).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qrep
