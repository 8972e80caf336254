#include "framecert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framecert {

Matrix::Matrix(int rows, int cols, ScalarKind kind)
    : rows_(rows), cols_(cols), kind_(kind) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(kind));
}

Matrix Matrix::identity(int n, ScalarKind kind) {
  Matrix m(n, n, kind);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(kind);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) throw Error("from_rows: no rows");
  size_t width = rows.front().size();
  if (width == 0) throw Error("from_rows: empty row");
  ScalarKind kind = rows.front().front().kind();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(width), kind);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw Error("from_rows: ragged rows");
    for (size_t c = 0; c < width; ++c) {
      if (rows[r][c].kind() != kind)
        throw Error("from_rows: mixed scalar variants");
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  return from_rows(cols).transpose();
}

void Matrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error("matrix index out of range");
}

Scalar& Matrix::at(int r, int c) {
  check_index(r, c);
  return data_[static_cast<size_t>(r) * cols_ + c];
}

const Scalar& Matrix::at(int r, int c) const {
  check_index(r, c);
  return data_[static_cast<size_t>(r) * cols_ + c];
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(cols_);
  for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::column(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw Error("set_row: size mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_column(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_)
    throw Error("set_column: size mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix m(cols_, rows_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()), kind_);
  for (size_t k = 0; k < idx.size(); ++k)
    for (int r = 0; r < rows_; ++r)
      m.at(r, static_cast<int>(k)) = at(r, idx[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
  Matrix m(static_cast<int>(idx.size()), cols_, kind_);
  for (size_t k = 0; k < idx.size(); ++k)
    for (int c = 0; c < cols_; ++c)
      m.at(static_cast<int>(k), c) = at(idx[k], c);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
  Matrix m(rows_, o.cols_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < o.cols_; ++c) {
      Scalar acc = Scalar::zero(kind_);
      for (int k = 0; k < cols_; ++k) acc = acc + at(r, k) * o.at(k, c);
      m.at(r, c) = acc;
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sum: shape mismatch");
  Matrix m(rows_, cols_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) + o.at(r, c);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix difference: shape mismatch");
  Matrix m(rows_, cols_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) - o.at(r, c);
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(rows_, cols_, kind_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) * s;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("apply: size mismatch");
  Vec out;
  out.reserve(rows_);
  for (int r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(kind_);
    for (int c = 0; c < cols_; ++c) acc = acc + at(r, c) * v[c];
    out.push_back(acc);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != o.at(r, c)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Scalar want =
          r == c ? Scalar::one(kind_) : Scalar::zero(kind_);
      if (at(r, c) != want) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (at(r, c) != at(c, r).conj()) return false;
  return true;
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      double mag;
      if (kind_ == ScalarKind::Float64)
        mag = std::fabs(at(r, c).float64());
      else
        mag = std::sqrt(at(r, c).abs_squared_exact().get_d());
      best = std::max(best, mag);
    }
  return best;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < cols_; ++c)
      os << at(r, c).str() << (c + 1 < cols_ ? " " : "");
    os << (r + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

Scalar inner_product(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("inner_product: size mismatch");
  if (a.empty()) throw Error("inner_product: empty vectors");
  Scalar acc = Scalar::zero(a.front().kind());
  for (size_t k = 0; k < a.size(); ++k) acc = acc + a[k] * b[k].conj();
  return acc;
}

Rational norm_squared_exact(const Vec& v) {
  Rational acc(0);
  for (const Scalar& s : v) acc += s.abs_squared_exact();
  return acc;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec_add: size mismatch");
  Vec out;
  out.reserve(a.size());
  for (size_t k = 0; k < a.size(); ++k) out.push_back(a[k] + b[k]);
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec_sub: size mismatch");
  Vec out;
  out.reserve(a.size());
  for (size_t k = 0; k < a.size(); ++k) out.push_back(a[k] - b[k]);
  return out;
}

Vec vec_scale(const Scalar& s, const Vec& a) {
  Vec out;
  out.reserve(a.size());
  for (const Scalar& x : a) out.push_back(s * x);
  return out;
}

Vec vec_neg(const Vec& a) {
  Vec out;
  out.reserve(a.size());
  for (const Scalar& x : a) out.push_back(-x);
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const Scalar& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

Vec vec_zero(int n, ScalarKind kind) {
  return Vec(static_cast<size_t>(n), Scalar::zero(kind));
}

Vec unit_vector(int n, int index, ScalarKind kind) {
  if (index < 0 || index >= n) throw Error("unit_vector: index out of range");
  Vec v = vec_zero(n, kind);
  v[index] = Scalar::one(kind);
  return v;
}

ScalarKind vec_kind(const Vec& v) {
  if (v.empty()) throw Error("vec_kind: empty vector");
  ScalarKind kind = v.front().kind();
  for (const Scalar& s : v)
    if (s.kind() != kind) throw Error("vec_kind: mixed scalar variants");
  return kind;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < v.size(); ++k)
    os << v[k].str() << (k + 1 < v.size() ? ", " : "");
  os << ")";
  return os.str();
}

Vec vec_from_rationals(const std::vector<std::string>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (const std::string& e : entries) v.push_back(Scalar(parse_rational(e)));
  return v;
}

}  // namespace framecert
