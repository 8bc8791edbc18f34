#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qrep/scalar.hpp"

namespace qrep {

// Dense matrix over a fixed field. Zero rows and/or columns are legal
// (so empty products and empty blocks compose without special cases).
// Invariant: every entry carries the matrix's field tag.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, const Field& f);  // zero matrix
  static ExactMatrix identity(int n, const Field& f);
  // Row-major integer literals, for tests and fixed blocks.
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                               const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(int i, int j) const;
  void set(int i, int j, const Scalar& v);  // checks the field tag
  void set(int i, int j, long v);

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  // Writes the k x k identity (times value) with top-left corner at (i0, j0).
  // k = 0 is a no-op; the block must fit.
  void place_identity(int i0, int j0, int k, long value = 1);
  // Copies b into this with top-left corner at (i0, j0).
  void place_block(int i0, int j0, const ExactMatrix& b);

  std::string to_string() const;  // single-line row list, for diagnostics

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;  // row-major, size rows_*cols_

  void check_index(int i, int j) const;
  Scalar& mut(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  friend class RrefResult;
  friend struct RowOps;
};

// Stacks a and b side by side / on top of each other.
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qrep
