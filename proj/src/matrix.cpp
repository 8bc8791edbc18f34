#include "qrep/matrix.hpp"

#include <sstream>

namespace qrep {

ExactMatrix::ExactMatrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

ExactMatrix ExactMatrix::identity(int n, const Field& f) {
  ExactMatrix m(n, n, f);
  m.place_identity(0, 0, n);
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows,
                                   const Field& f) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  ExactMatrix m(r, c, f);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw Error("ragged matrix literal");
    int j = 0;
    for (long v : row) m.mut(i, j++) = Scalar::from_long(v, f);
    ++i;
  }
  return m;
}

void ExactMatrix::check_index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of bounds for " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

const Scalar& ExactMatrix::at(int i, int j) const {
  check_index(i, j);
  return e_[static_cast<size_t>(i) * cols_ + j];
}

void ExactMatrix::set(int i, int j, const Scalar& v) {
  check_index(i, j);
  if (v.field() != field_)
    throw FieldMismatch("entry field " + v.field().to_string() + " differs from matrix field " +
                        field_.to_string());
  mut(i, j) = v;
}

void ExactMatrix::set(int i, int j, long v) { set(i, j, Scalar::from_long(v, field_)); }

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix product over mixed fields");
  if (cols_ != o.rows_)
    throw Error("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                std::to_string(o.cols_));
  ExactMatrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.mut(i, j) += a * b;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix sum over mixed fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  ExactMatrix r(rows_, cols_, field_);
  for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] + o.e_[t];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix difference over mixed fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
  ExactMatrix r(rows_, cols_, field_);
  for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] - o.e_[t];
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r(rows_, cols_, field_);
  for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  if (c.field() != field_) throw FieldMismatch("scaling over mixed fields");
  ExactMatrix r(rows_, cols_, field_);
  for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.mut(j, i) = at(i, j);
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

void ExactMatrix::place_identity(int i0, int j0, int k, long value) {
  if (k < 0) throw Error("negative identity block size");
  if (k == 0) return;
  check_index(i0, j0);
  check_index(i0 + k - 1, j0 + k - 1);
  const Scalar v = Scalar::from_long(value, field_);
  for (int t = 0; t < k; ++t) mut(i0 + t, j0 + t) = v;
}

void ExactMatrix::place_block(int i0, int j0, const ExactMatrix& b) {
  if (b.field() != field_) throw FieldMismatch("block field differs from matrix field");
  if (b.rows_ == 0 || b.cols_ == 0) return;
  check_index(i0, j0);
  check_index(i0 + b.rows_ - 1, j0 + b.cols_ - 1);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) mut(i0 + i, j0 + j) = b.at(i, j);
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("hstack over mixed fields");
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  ExactMatrix r(a.rows(), a.cols() + b.cols(), a.field());
  r.place_block(0, 0, a);
  r.place_block(0, a.cols(), b);
  return r;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("vstack over mixed fields");
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  ExactMatrix r(a.rows() + b.rows(), a.cols(), a.field());
  r.place_block(0, 0, a);
  r.place_block(a.rows(), 0, b);
  return r;
}

}  // namespace qrep
