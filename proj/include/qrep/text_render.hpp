#pragma once

#include <string>

#include "qrep/rep.hpp"

namespace qrep {

// Entries right-aligned per column, one row per line; empty for 0xN shapes.
std::string render_matrix(const ExactMatrix& m);

// Field, dimension line, then one shape-annotated matrix block per arrow.
std::string render_representation(const Representation& m);

}  // namespace qrep
