#pragma once

#include "coorbit/lie.hpp"

namespace coorbit {

/// A catalog algebra together with its standard diagonal-torus Levi action.
struct CatalogEntry {
  NilpotentLieAlgebra algebra;
  WeightedLeviAction levi;
};

/// Strict upper-triangular n x n matrices; basis e_{i,j} (i < j) in
/// lexicographic order, labels "e_i,j". Levi = diagonal torus, dimension n,
/// acting with weight (delta_{ik} - delta_{jk}) on e_{i,j}. Requires n >= 2.
CatalogEntry catalog_gl_upper(int n);

/// The Borel unipotent radical of the rank-n symplectic algebra realized as
/// 2n x 2n matrices A with A^T J + J A = 0 (J anti-diagonal symplectic),
/// A strictly upper triangular; dimension n^2. Basis indexed by the
/// fundamental matrix position (i,j) (the upper-left representative of each
/// mirror pair), labels "e_i,j" in lexicographic order. Levi = diagonal torus
/// {diag(t_1..t_n, -t_n..-t_1)}, dimension n. Requires n >= 2.
CatalogEntry catalog_sp_unipotent(int n);

/// Heisenberg algebra of rank m: basis p_1..p_m, q_1..q_m, z with
/// [p_i, q_i] = z. Requires m >= 1.
NilpotentLieAlgebra catalog_heisenberg(int m);

/// Fundamental positions (1-based matrix coordinates) of the sp catalog basis,
/// in basis order. Exposed for tests and root data.
std::vector<std::pair<int, int>> sp_fundamental_positions(int n);
/// Pairs (i,j) of the gl catalog basis, in basis order.
std::vector<std::pair<int, int>> gl_pairs(int n);

/// The 2n x 2n representative matrix of the k-th sp basis element.
Matrix sp_representative(int n, int k);

}  // namespace coorbit
