#include "coorbit/subspace.hpp"

#include <stdexcept>

namespace coorbit {

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  return row_space(Matrix::identity(ambient));
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  return row_space(Matrix::from_rows(generators, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s;
  s.ambient_ = m.cols;
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    s.basis_.push_back(r.mat.row(static_cast<int>(i)));
    s.pivots_.push_back(r.pivots[i]);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw std::invalid_argument("reduce: ambient dimension mismatch");
  }
  Vec out = v;
  for (size_t k = 0; k < basis_.size(); ++k) {
    Rat c = out[pivots_[k]];
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j) out[j] -= c * basis_[k][j];
  }
  return out;
}

Matrix Subspace::residual_matrix() const {
  Matrix e = Matrix::identity(ambient_);
  for (size_t k = 0; k < basis_.size(); ++k) {
    for (int i = 0; i < ambient_; ++i) e.at(i, pivots_[k]) -= basis_[k][i];
  }
  // That subtracts r_k as the p_k-th column of the correction term; verify by
  // construction: (E v)[i] = v[i] - sum_k v[p_k] r_k[i].
  return e;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& row : other.basis_) {
    if (!contains(row)) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace sum ambient mismatch");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace intersect ambient mismatch");
  return kernel(vstack(residual_matrix(), other.residual_matrix()));
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    Vec x = zero_vec(m.cols);
    x[c] = 1;
    for (size_t row = 0; row < r.pivots.size(); ++row) {
      x[r.pivots[row]] = -r.mat.at(static_cast<int>(row), c);
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.cols, gens);
}

std::optional<LinearSolution> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows) {
    throw std::invalid_argument("solve: rhs length mismatch");
  }
  Matrix aug = hstack(m, Matrix::from_rows({b}, m.rows).transpose());
  RrefResult r = rref(aug);
  for (int p : r.pivots) {
    if (p == m.cols) return std::nullopt;  // pivot in the augmented column
  }
  Vec x = zero_vec(m.cols);
  for (size_t row = 0; row < r.pivots.size(); ++row) {
    x[r.pivots[row]] = r.mat.at(static_cast<int>(row), m.cols);
  }
  return LinearSolution{std::move(x), kernel(m)};
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows != target.ambient_dim()) {
    throw std::invalid_argument("preimage: ambient mismatch");
  }
  return kernel(target.residual_matrix() * m);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace coorbit
