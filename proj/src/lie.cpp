#include "coorbit/lie.hpp"

#include <algorithm>
#include <set>

namespace coorbit {

JacobiViolation::JacobiViolation(int i_, int j_, int k_)
    : std::runtime_error("Jacobi identity fails on basis triple (" + std::to_string(i_) + ", " +
                         std::to_string(j_) + ", " + std::to_string(k_) + ")"),
      i(i_),
      j(j_),
      k(k_) {}

NotClosed::NotClosed(int i_, int j_)
    : std::runtime_error("span not closed under bracket at pair (" + std::to_string(i_) + ", " +
                         std::to_string(j_) + ")"),
      i(i_),
      j(j_) {}

WrongDepth::WrongDepth(int actual_)
    : std::runtime_error("operation requires depth 2, functional has depth " +
                         std::to_string(actual_)),
      actual(actual_) {}

namespace {

SparseVec normalize_sparse(const SparseVec& terms, int dim) {
  std::map<int, Rat> acc;
  for (const auto& t : terms) {
    if (t.k < 0 || t.k >= dim) throw std::invalid_argument("bracket term index out of range");
    acc[t.k] += t.c;
  }
  SparseVec out;
  for (const auto& [k, c] : acc) {
    if (c != 0) out.push_back({k, c});
  }
  return out;
}

}  // namespace

int NilpotentLieAlgebra::label_index(const std::string& label) const {
  for (int i = 0; i < dim_; ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::invalid_argument("unknown basis label \"" + label + "\"");
}

Vec NilpotentLieAlgebra::bracket_basis(int i, int j) const {
  Vec out = zero_vec(dim_);
  if (i == j) return out;
  Rat sign(1);
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return out;
  for (const auto& t : it->second) out[t.k] = sign * t.c;
  return out;
}

Vec NilpotentLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw std::invalid_argument("bracket operand dimension mismatch");
  }
  Vec out = zero_vec(dim_);
  for (const auto& [key, terms] : brackets_) {
    Rat coef = x[key.first] * y[key.second] - x[key.second] * y[key.first];
    if (coef == 0) continue;
    for (const auto& t : terms) out[t.k] += coef * t.c;
  }
  return out;
}

Matrix NilpotentLieAlgebra::ad(const Vec& y) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec e = zero_vec(dim_);
    e[j] = 1;
    Vec col = bracket(y, e);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool NilpotentLieAlgebra::same_structure(const NilpotentLieAlgebra& other) const {
  return dim_ == other.dim_ && labels_ == other.labels_ && brackets_ == other.brackets_;
}

NilpotentLieAlgebra make_algebra(int dim, std::vector<std::string> labels, BracketTable brackets) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(labels.size()) != dim) {
    throw std::invalid_argument("label count does not match dimension");
  }
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != dim) throw std::invalid_argument("duplicate basis labels");
  }

  NilpotentLieAlgebra alg;
  alg.dim_ = dim;
  alg.labels_ = std::move(labels);
  for (const auto& [key, terms] : brackets) {
    if (key.first < 0 || key.second >= dim || key.first >= key.second) {
      throw std::invalid_argument("bracket key out of range or not i<j");
    }
    SparseVec norm = normalize_sparse(terms, dim);
    if (!norm.empty()) alg.brackets_[key] = std::move(norm);
  }

  // Jacobi on all basis triples; report the lexicographically first failure.
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Vec bij = alg.bracket_basis(i, j);
      for (int k = j + 1; k < dim; ++k) {
        Vec ek = zero_vec(dim);
        ek[k] = 1;
        Vec sum = alg.bracket(bij, ek);
        Vec ei = zero_vec(dim);
        ei[i] = 1;
        sum = add(sum, alg.bracket(alg.bracket_basis(j, k), ei));
        Vec ej = zero_vec(dim);
        ej[j] = 1;
        sum = add(sum, alg.bracket(alg.bracket_basis(k, i), ej));
        if (!is_zero(sum)) throw JacobiViolation(i + 1, j + 1, k + 1);
      }
    }
  }

  // Lower central series; non-stabilizing-to-zero means not nilpotent.
  alg.series_.push_back(Subspace::full(dim));
  while (alg.series_.back().dim() > 0) {
    const Subspace& prev = alg.series_.back();
    std::vector<Vec> gens;
    for (int i = 0; i < dim; ++i) {
      Vec ei = zero_vec(dim);
      ei[i] = 1;
      for (const auto& row : prev.basis()) gens.push_back(alg.bracket(ei, row));
    }
    Subspace next = Subspace::span(dim, gens);
    if (next.dim() == prev.dim()) throw NotNilpotent();
    alg.series_.push_back(std::move(next));
  }

  if (dim == 0) {
    alg.center_ = Subspace::zero(0);
  } else {
    Matrix stacked(0, dim);
    for (int j = 0; j < dim; ++j) {
      Vec ej = zero_vec(dim);
      ej[j] = 1;
      stacked = vstack(stacked, alg.ad(ej));
    }
    alg.center_ = kernel(stacked);
  }
  return alg;
}

NilpotentLieAlgebra make_algebra(int dim, BracketTable brackets) {
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  return make_algebra(dim, std::move(labels), std::move(brackets));
}

bool is_ideal(const NilpotentLieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) return false;
  for (int i = 0; i < alg.dim(); ++i) {
    Vec ei = zero_vec(alg.dim());
    ei[i] = 1;
    for (const auto& row : s.basis()) {
      if (!s.contains(alg.bracket(ei, row))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const NilpotentLieAlgebra& alg, const Subspace& s, std::pair<int, int>* witness) {
  const auto& rows = s.basis();
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = a + 1; b < rows.size(); ++b) {
      if (!s.contains(alg.bracket(rows[a], rows[b]))) {
        if (witness) *witness = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
        return false;
      }
    }
  }
  return true;
}

QuotientResult quotient(const NilpotentLieAlgebra& alg, const Subspace& ideal) {
  if (ideal.ambient_dim() != alg.dim()) throw std::invalid_argument("ideal ambient mismatch");
  if (!is_ideal(alg, ideal)) throw NotAnIdeal();

  int d = alg.dim();
  std::vector<bool> is_pivot(static_cast<size_t>(d), false);
  for (int p : ideal.pivots()) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> kept;
  for (int c = 0; c < d; ++c) {
    if (!is_pivot[static_cast<size_t>(c)]) kept.push_back(c);
  }

  int q = static_cast<int>(kept.size());
  Matrix e = ideal.residual_matrix();
  Matrix proj(q, d);
  for (int a = 0; a < q; ++a) {
    for (int jj = 0; jj < d; ++jj) proj.at(a, jj) = e.at(kept[a], jj);
  }

  BracketTable table;
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      Vec w = proj.apply(alg.bracket_basis(kept[a], kept[b]));
      SparseVec terms;
      for (int k = 0; k < q; ++k) {
        if (w[k] != 0) terms.push_back({k, w[k]});
      }
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  }

  std::vector<std::string> labels;
  for (int c : kept) labels.push_back(alg.labels()[c]);
  QuotientResult out{make_algebra(q, std::move(labels), std::move(table)), std::move(proj), std::move(kept)};
  return out;
}

Subspace subalgebra_from_pattern(const NilpotentLieAlgebra& alg, const std::vector<int>& coords) {
  std::set<int> want;
  for (int c : coords) {
    if (c < 0 || c >= alg.dim()) throw std::invalid_argument("pattern coordinate out of range");
    want.insert(c);
  }
  std::vector<int> sorted(want.begin(), want.end());
  for (size_t a = 0; a < sorted.size(); ++a) {
    for (size_t b = a + 1; b < sorted.size(); ++b) {
      Vec w = alg.bracket_basis(sorted[a], sorted[b]);
      for (int k = 0; k < alg.dim(); ++k) {
        if (w[k] != 0 && !want.count(k)) throw NotClosed(sorted[a] + 1, sorted[b] + 1);
      }
    }
  }
  std::vector<Vec> gens;
  for (int c : sorted) {
    Vec e = zero_vec(alg.dim());
    e[c] = 1;
    gens.push_back(std::move(e));
  }
  return Subspace::span(alg.dim(), gens);
}

bool Functional::vanishes_on(const Subspace& s) const {
  for (const auto& row : s.basis()) {
    if (evaluate(row) != 0) return false;
  }
  return true;
}

Functional make_functional(const NilpotentLieAlgebra& alg, Vec coeffs) {
  if (static_cast<int>(coeffs.size()) != alg.dim()) {
    throw std::invalid_argument("functional coefficient count mismatch");
  }
  return Functional{&alg, std::move(coeffs)};
}

Functional make_functional(const NilpotentLieAlgebra& alg, const std::map<std::string, Rat>& by_label) {
  Vec coeffs = zero_vec(alg.dim());
  for (const auto& [label, c] : by_label) coeffs[alg.label_index(label)] = c;
  return Functional{&alg, std::move(coeffs)};
}

void require_same_algebra(const NilpotentLieAlgebra& alg, const Functional& psi) {
  if (psi.algebra == &alg) return;
  if (psi.algebra != nullptr && psi.algebra->same_structure(alg)) return;
  throw AlgebraMismatch();
}

Matrix WeightedLeviAction::action_of(const Vec& levi_vec) const {
  if (static_cast<int>(levi_vec.size()) != levi_dim) {
    throw std::invalid_argument("Levi vector dimension mismatch");
  }
  Matrix d(algebra_dim, algebra_dim);
  for (int k = 0; k < levi_dim; ++k) {
    if (levi_vec[k] == 0) continue;
    d = d + action[k].scaled(levi_vec[k]);
  }
  return d;
}

bool WeightedLeviAction::is_diagonal() const {
  for (const auto& m : action) {
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) {
        if (i != j && m.at(i, j) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<Vec> WeightedLeviAction::coordinate_weights() const {
  if (!is_diagonal()) throw std::invalid_argument("Levi action is not diagonal; no coordinate weights");
  std::vector<Vec> w(static_cast<size_t>(algebra_dim), zero_vec(levi_dim));
  for (int j = 0; j < algebra_dim; ++j) {
    for (int k = 0; k < levi_dim; ++k) w[j][k] = action[k].at(j, j);
  }
  return w;
}

Vec WeightedLeviAction::levi_bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(levi_dim);
  for (const auto& [key, terms] : brackets_m) {
    Rat coef = x[key.first] * y[key.second] - x[key.second] * y[key.first];
    if (coef == 0) continue;
    for (const auto& t : terms) out[t.k] += coef * t.c;
  }
  return out;
}

WeightedLeviAction make_levi_action(const NilpotentLieAlgebra& alg, int levi_dim,
                                    std::vector<Matrix> action, BracketTable brackets_m) {
  if (levi_dim < 0 || static_cast<int>(action.size()) != levi_dim) {
    throw std::invalid_argument("Levi action matrix count mismatch");
  }
  int d = alg.dim();
  for (const auto& m : action) {
    if (m.rows != d || m.cols != d) throw std::invalid_argument("Levi action matrix shape mismatch");
  }

  WeightedLeviAction levi;
  levi.algebra_dim = d;
  levi.levi_dim = levi_dim;
  levi.action = std::move(action);
  for (const auto& [key, terms] : brackets_m) {
    if (key.first < 0 || key.second >= levi_dim || key.first >= key.second) {
      throw std::invalid_argument("Levi bracket key out of range or not i<j");
    }
    SparseVec norm = normalize_sparse(terms, levi_dim);
    if (!norm.empty()) levi.brackets_m[key] = std::move(norm);
  }

  // Derivation identity on all basis pairs, for each Levi direction.
  for (int k = 0; k < levi_dim; ++k) {
    const Matrix& dk = levi.action[k];
    for (int i = 0; i < d; ++i) {
      Vec ei = zero_vec(d);
      ei[i] = 1;
      Vec dei = dk.apply(ei);
      for (int j = i + 1; j < d; ++j) {
        Vec ej = zero_vec(d);
        ej[j] = 1;
        Vec lhs = dk.apply(alg.bracket_basis(i, j));
        Vec rhs = add(alg.bracket(dei, ej), alg.bracket(ei, dk.apply(ej)));
        if (lhs != rhs) {
          throw std::invalid_argument("Levi direction " + std::to_string(k + 1) +
                                      " is not a derivation (fails on basis pair (" +
                                      std::to_string(i + 1) + ", " + std::to_string(j + 1) + "))");
        }
      }
    }
  }

  // Jacobi for the Levi's own brackets.
  for (int i = 0; i < levi_dim; ++i) {
    Vec ei = zero_vec(levi_dim);
    ei[i] = 1;
    for (int j = i + 1; j < levi_dim; ++j) {
      Vec ej = zero_vec(levi_dim);
      ej[j] = 1;
      Vec bij = levi.levi_bracket(ei, ej);
      for (int k = j + 1; k < levi_dim; ++k) {
        Vec ek = zero_vec(levi_dim);
        ek[k] = 1;
        Vec sum = levi.levi_bracket(bij, ek);
        sum = add(sum, levi.levi_bracket(levi.levi_bracket(ej, ek), ei));
        sum = add(sum, levi.levi_bracket(levi.levi_bracket(ek, ei), ej));
        if (!is_zero(sum)) throw JacobiViolation(i + 1, j + 1, k + 1);
      }
    }
  }

  // The action must realize the Levi brackets: [D_i, D_j] = D_{[X_i, X_j]}.
  for (int i = 0; i < levi_dim; ++i) {
    for (int j = i + 1; j < levi_dim; ++j) {
      Matrix comm = levi.action[i] * levi.action[j] - levi.action[j] * levi.action[i];
      Vec ei = zero_vec(levi_dim);
      ei[i] = 1;
      Vec ej = zero_vec(levi_dim);
      ej[j] = 1;
      Matrix expected = levi.action_of(levi.levi_bracket(ei, ej));
      if (!(comm == expected)) {
        throw std::invalid_argument("Levi action is not a Lie homomorphism on pair (" +
                                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  return levi;
}

}  // namespace coorbit
