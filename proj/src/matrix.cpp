#include "coorbit/matrix.hpp"

#include <stdexcept>

namespace coorbit {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows_in, int cols_hint) {
  int c = cols_hint;
  if (c < 0) c = rows_in.empty() ? 0 : static_cast<int>(rows_in.front().size());
  Matrix m(static_cast<int>(rows_in.size()), c);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows_in[i].size()) != c) {
      throw std::invalid_argument("ragged rows in matrix construction");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec r(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < data.size(); ++i) out.data[i] += rhs.data[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < data.size(); ++i) out.data[i] -= rhs.data[i];
  return out;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix out(*this);
  for (auto& x : out.data) x *= c;
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("matrix apply shape mismatch");
  Vec y(static_cast<size_t>(rows), Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const {
  for (const auto& x : data)
    if (x != 0) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.mat;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int piv = -1;
    for (int i = r; i < a.rows; ++i) {
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    Rat inv = Rat(1) / a.at(r, c);
    for (int j = c; j < a.cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Rat determinant(Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Rat det(1);
  int n = m.rows;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, j) = b.at(i, j);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
  }
  return out;
}

std::string matrix_to_string(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    out += i ? "\n" : "";
    out += vec_to_string(m.row(i));
  }
  return out;
}

}  // namespace coorbit
