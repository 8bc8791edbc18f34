#include "qrep/linalg.hpp"

#include <utility>

namespace qrep {

namespace {

// Row-list workspace; rows are dense but row operations skip zero entries of
// the pivot row, which keeps elimination cheap on the sparse systems the hom
// solver produces.
struct Workspace {
  std::vector<std::vector<Scalar>> rows;
  int cols;

  explicit Workspace(const ExactMatrix& a) : cols(a.cols()) {
    rows.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
      rows[i].reserve(cols);
      for (int j = 0; j < cols; ++j) rows[i].push_back(a.at(i, j));
    }
  }
};

bool is_unit(const Scalar& s) {
  if (s.is_one()) return true;
  return s.field().is_rationals() && s.value() == -1;
}

}  // namespace

Rref rref(const ExactMatrix& a) {
  Workspace w(a);
  const int nrows = static_cast<int>(w.rows.size());
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < w.cols && r < nrows; ++col) {
    // Prefer a +-1 pivot to keep rational entries small; any fixed choice
    // yields the same RREF since RREF is unique.
    int pick = -1;
    for (int i = r; i < nrows; ++i) {
      if (w.rows[i][col].is_zero()) continue;
      if (pick < 0) pick = i;
      if (is_unit(w.rows[i][col])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) continue;
    std::swap(w.rows[r], w.rows[pick]);
    if (!w.rows[r][col].is_one()) {
      const Scalar inv = w.rows[r][col].inverse();
      for (int j = col; j < w.cols; ++j)
        if (!w.rows[r][j].is_zero()) w.rows[r][j] *= inv;
    }
    for (int i = 0; i < nrows; ++i) {
      if (i == r || w.rows[i][col].is_zero()) continue;
      const Scalar m = w.rows[i][col];
      for (int j = col; j < w.cols; ++j)
        if (!w.rows[r][j].is_zero()) w.rows[i][j] -= m * w.rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  Rref out{ExactMatrix(nrows, w.cols, a.field()), std::move(pivots)};
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < w.cols; ++j)
      if (!w.rows[i][j].is_zero()) out.mat.set(i, j, w.rows[i][j]);
  return out;
}

int rank(const ExactMatrix& a) { return rref(a).rank(); }

bool is_invertible(const ExactMatrix& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

Kernel kernel_with_free_columns(const ExactMatrix& a) {
  const Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Kernel out;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactMatrix v(a.cols(), 1, a.field());
    v.set(f, 0, 1);
    for (size_t t = 0; t < r.pivot_cols.size(); ++t)
      v.set(r.pivot_cols[t], 0, -r.mat.at(static_cast<int>(t), f));
    out.basis.push_back(std::move(v));
    out.free_cols.push_back(f);
  }
  return out;
}

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& a) {
  return kernel_with_free_columns(a).basis;
}

std::optional<ExactMatrix> solve_all(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("solve over mixed fields");
  if (a.rows() != b.rows()) throw Error("solve shape mismatch");
  const Rref r = rref(hstack(a, b));
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  ExactMatrix x(a.cols(), b.cols(), a.field());
  for (size_t t = 0; t < r.pivot_cols.size(); ++t)
    for (int j = 0; j < b.cols(); ++j)
      x.set(r.pivot_cols[t], j, r.mat.at(static_cast<int>(t), a.cols() + j));
  return x;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (b.cols() != 1) throw Error("solve expects a column vector right-hand side");
  return solve_all(a, b);
}

}  // namespace qrep
