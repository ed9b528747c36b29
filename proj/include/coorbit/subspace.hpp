#pragma once

#include <optional>
#include <vector>

#include "coorbit/matrix.hpp"

namespace coorbit {

/// A linear subspace of Q^n, stored as the unique reduced-row-echelon basis.
/// Two Subspace values compare equal iff they are the same subspace.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& generators);
  /// Span of the rows of m.
  static Subspace row_space(const Matrix& m);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residual of v after eliminating the pivot coordinates against the basis;
  /// zero iff v lies in the subspace.
  Vec reduce(const Vec& v) const;
  /// Matrix E with E v = reduce(v); membership test as a linear map.
  Matrix residual_matrix() const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;   // RREF rows, no zero rows
  std::vector<int> pivots_;  // pivot column of each basis row
};

/// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

struct LinearSolution {
  Vec particular;
  Subspace homogeneous;  // kernel of the coefficient matrix
};

/// All solutions of m x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, const Vec& b);

/// Preimage {x : m x in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

/// Image {m x : x in Q^cols}.
Subspace image(const Matrix& m);

}  // namespace coorbit
