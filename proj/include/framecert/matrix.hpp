#pragma once

#include <string>
#include <vector>

#include "framecert/scalar.hpp"

namespace framecert {

using Vec = std::vector<Scalar>;

// Dense matrix with one scalar kind for every entry. Row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), kind_(ScalarKind::Rational) {}
  Matrix(int rows, int cols, ScalarKind kind);

  static Matrix identity(int n, ScalarKind kind);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ScalarKind kind() const { return kind_; }

  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;

  Vec row(int r) const;
  Vec column(int c) const;
  void set_row(int r, const Vec& v);
  void set_column(int c, const Vec& v);
  void swap_rows(int a, int b);

  Matrix transpose() const;
  Matrix conjugate_transpose() const;
  Matrix select_columns(const std::vector<int>& idx) const;
  Matrix select_rows(const std::vector<int>& idx) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;
  bool is_hermitian() const;

  // Largest |entry| as double (uses |.|^2 for exact kinds).
  double max_abs() const;

  std::string str() const;

 private:
  void check_index(int r, int c) const;
  int rows_;
  int cols_;
  ScalarKind kind_;
  std::vector<Scalar> data_;
};

// <a, b> = sum_k a_k * conj(b_k); conjugate-linear in the second slot.
Scalar inner_product(const Vec& a, const Vec& b);
Rational norm_squared_exact(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& a);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_equal(const Vec& a, const Vec& b);
Vec vec_zero(int n, ScalarKind kind);
Vec unit_vector(int n, int index, ScalarKind kind);
ScalarKind vec_kind(const Vec& v);
std::string vec_str(const Vec& v);

// Parse/format helpers used by io and tests.
Vec vec_from_rationals(const std::vector<std::string>& entries);

}  // namespace framecert
