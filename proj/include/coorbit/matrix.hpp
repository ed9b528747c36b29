#pragma once

#include <vector>

#include "coorbit/rational.hpp"

namespace coorbit {

/// Dense row-major matrix over Q.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> data;  // rows * cols entries, row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rat(0)) {}

  static Matrix identity(int n);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static Matrix from_rows(const std::vector<Vec>& rows_in, int cols_hint = -1);

  Rat& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rat& c) const;
  /// Matrix-vector product.
  Vec apply(const Vec& x) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/// Determinant of a square matrix (fraction-free not needed; exact Gauss).
Rat determinant(Matrix m);

/// Stacks b below a (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);
/// Puts b to the right of a (equal row counts).
Matrix hstack(const Matrix& a, const Matrix& b);

std::string matrix_to_string(const Matrix& m);

}  // namespace coorbit
