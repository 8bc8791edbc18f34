#pragma once

#include <optional>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

// Reduced row echelon form. RREF is unique, so every function below is
// deterministic: same input, same output, bit for bit.
struct Rref {
  ExactMatrix mat;
  std::vector<int> pivot_cols;  // ascending
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(const ExactMatrix& a);

int rank(const ExactMatrix& a);

bool is_invertible(const ExactMatrix& a);  // square with full rank (0x0 counts)

// Basis of { x : a x = 0 } as cols()x1 column vectors, one per free column of
// the RREF in ascending column order, each with a 1 in its free position and
// zeros in the other free positions.
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& a);

// Kernel basis together with the free column indices (basis[k] has a 1 at
// free_cols[k]); one RREF pass.
struct Kernel {
  std::vector<ExactMatrix> basis;
  std::vector<int> free_cols;
};
Kernel kernel_with_free_columns(const ExactMatrix& a);

// The particular solution of a x = b with all free variables set to zero,
// or nullopt when the system is inconsistent. b must be rows()x1.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// Column-wise solve of a X = B with free variables zero; nullopt if any
// column is inconsistent.
std::optional<ExactMatrix> solve_all(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qrep
