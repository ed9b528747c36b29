#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coorbit/subspace.hpp"

namespace coorbit {

/// One term c * e_k of a bracket expansion.
struct BracketTerm {
  int k = 0;
  Rat c;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};
using SparseVec = std::vector<BracketTerm>;

/// Structure constants, keyed by (i, j) with i < j; antisymmetry is implied.
using BracketTable = std::map<std::pair<int, int>, SparseVec>;

struct JacobiViolation : std::runtime_error {
  int i, j, k;  // 1-based basis positions
  JacobiViolation(int i_, int j_, int k_);
};
struct NotNilpotent : std::runtime_error {
  NotNilpotent() : std::runtime_error("bracket table generates a non-nilpotent algebra") {}
};
struct NotAnIdeal : std::runtime_error {
  NotAnIdeal() : std::runtime_error("subspace is not an ideal") {}
};
struct NotClosed : std::runtime_error {
  int i, j;  // 1-based positions of the offending pair
  NotClosed(int i_, int j_);
};
struct AlgebraMismatch : std::runtime_error {
  AlgebraMismatch() : std::runtime_error("functionals belong to different algebras") {}
};
struct WrongDepth : std::runtime_error {
  int actual;
  explicit WrongDepth(int actual_);
};
struct NotAFlag : std::runtime_error {
  explicit NotAFlag(const std::string& why) : std::runtime_error("not a complete flag: " + why) {}
};
struct NotIdeals : std::runtime_error {
  explicit NotIdeals(int k) : std::runtime_error("flag member " + std::to_string(k) + " is not an ideal") {}
};
struct TrivialFunctional : std::runtime_error {
  TrivialFunctional() : std::runtime_error("functional is zero; degeneration checks need nonzero inputs") {}
};
struct NotHorizontal : std::runtime_error {
  explicit NotHorizontal(const std::string& why) : std::runtime_error("not a horizontal degeneration: " + why) {}
};

/// A finite-dimensional nilpotent Lie algebra over Q, presented by structure
/// constants on a fixed ordered basis. Construction (via make_algebra)
/// validates the Jacobi identity and nilpotency.
class NilpotentLieAlgebra {
 public:
  NilpotentLieAlgebra() = default;

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& brackets() const { return brackets_; }
  /// Index of a basis label; throws std::invalid_argument on unknown labels.
  int label_index(const std::string& label) const;

  /// [e_i, e_j] as a dense vector, any i, j.
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(y): x |-> [y, x].
  Matrix ad(const Vec& y) const;

  /// n_1 = g, n_{k+1} = [g, n_k]; the list ends with the zero subspace.
  const std::vector<Subspace>& lower_central_series() const { return series_; }
  /// Number of nonzero series terms.
  int nilpotency_class() const { return static_cast<int>(series_.size()) - 1; }
  const Subspace& center() const { return center_; }

  bool same_structure(const NilpotentLieAlgebra& other) const;

 private:
  friend NilpotentLieAlgebra make_algebra(int dim, std::vector<std::string> labels,
                                          BracketTable brackets);
  int dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable brackets_;
  std::vector<Subspace> series_;
  Subspace center_;
};

/// Validating constructor. Throws JacobiViolation or NotNilpotent; also
/// rejects out-of-range indices, ragged labels, duplicate labels.
NilpotentLieAlgebra make_algebra(int dim, std::vector<std::string> labels, BracketTable brackets);
/// Same with default labels e1..edim.
NilpotentLieAlgebra make_algebra(int dim, BracketTable brackets);

struct QuotientResult {
  NilpotentLieAlgebra algebra;
  Matrix projection;            // (quotient dim) x (ambient dim)
  std::vector<int> kept_coords; // ambient coordinate carried by each quotient coordinate
};

/// Quotient by an ideal, with the projection matrix. Throws NotAnIdeal.
QuotientResult quotient(const NilpotentLieAlgebra& alg, const Subspace& ideal);

/// Span of the given coordinates, certified bracket-closed. Throws NotClosed.
Subspace subalgebra_from_pattern(const NilpotentLieAlgebra& alg, const std::vector<int>& coords);

bool is_ideal(const NilpotentLieAlgebra& alg, const Subspace& s);
/// Closure check; when `witness` is non-null and the check fails, it receives
/// the 1-based offending basis-row pair.
bool is_subalgebra(const NilpotentLieAlgebra& alg, const Subspace& s,
                   std::pair<int, int>* witness = nullptr);

/// A linear functional on an algebra, stored by coefficients in the dual
/// basis. Holds a non-owning pointer used only for mismatch checks; keep the
/// algebra alive for the functional's lifetime.
struct Functional {
  const NilpotentLieAlgebra* algebra = nullptr;
  Vec coeffs;

  Rat evaluate(const Vec& x) const { return dot(coeffs, x); }
  bool vanishes_on(const Subspace& s) const;
  bool is_zero_functional() const { return is_zero(coeffs); }
  friend bool operator==(const Functional& a, const Functional& b) { return a.coeffs == b.coeffs; }
};

Functional make_functional(const NilpotentLieAlgebra& alg, Vec coeffs);
Functional make_functional(const NilpotentLieAlgebra& alg, const std::map<std::string, Rat>& by_label);
/// Throws AlgebraMismatch unless psi was built on alg (pointer identity or
/// structural equality).
void require_same_algebra(const NilpotentLieAlgebra& alg, const Functional& psi);

/// An action of a Levi Lie algebra on the nilpotent algebra: one derivation
/// matrix per Levi basis direction, plus the Levi's own structure constants
/// (empty table = abelian). Stored detached from the algebra; constructors
/// validate against a given algebra.
struct WeightedLeviAction {
  int algebra_dim = 0;
  int levi_dim = 0;
  std::vector<Matrix> action;
  BracketTable brackets_m;

  /// Derivation matrix of a Levi coordinate vector.
  Matrix action_of(const Vec& levi_vec) const;
  bool is_diagonal() const;
  /// Per algebra coordinate, its weight vector (requires is_diagonal()).
  std::vector<Vec> coordinate_weights() const;
  /// Bracket inside the Levi.
  Vec levi_bracket(const Vec& x, const Vec& y) const;
};

/// Validates shapes, the derivation identity for each action matrix on all
/// basis pairs, Jacobi for brackets_m, and that the action is a Lie-algebra
/// homomorphism (commutators of action matrices realize brackets_m).
WeightedLeviAction make_levi_action(const NilpotentLieAlgebra& alg, int levi_dim,
                                    std::vector<Matrix> action, BracketTable brackets_m);

}  // namespace coorbit
