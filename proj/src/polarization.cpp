#include "coorbit/polarization.hpp"

#include <algorithm>

namespace coorbit {

bool is_subordinate(const NilpotentLieAlgebra& alg, const Functional& psi, const Subspace& h) {
  require_same_algebra(alg, psi);
  std::pair<int, int> bad;
  if (!is_subalgebra(alg, h, &bad)) throw NotClosed(bad.first, bad.second);
  const auto& rows = h.basis();
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = a + 1; b < rows.size(); ++b) {
      if (psi.evaluate(alg.bracket(rows[a], rows[b])) != 0) return false;
    }
  }
  return true;
}

bool is_polarization(const NilpotentLieAlgebra& alg, const Functional& psi, const Subspace& h) {
  bool sub = is_subordinate(alg, psi, h);
  return sub && 2 * h.dim() == 2 * alg.dim() - orbit_dimension(alg, psi);
}

Polarization vergne_polarization(const NilpotentLieAlgebra& alg, const Functional& psi,
                                 const std::vector<Subspace>& flag) {
  require_same_algebra(alg, psi);
  int d = alg.dim();
  if (static_cast<int>(flag.size()) != d + 1) {
    throw NotAFlag("expected " + std::to_string(d + 1) + " members, got " +
                   std::to_string(flag.size()));
  }
  for (int k = 0; k <= d; ++k) {
    if (flag[k].ambient_dim() != d) throw NotAFlag("member " + std::to_string(k) + " has wrong ambient");
    if (flag[k].dim() != k) {
      throw NotAFlag("member " + std::to_string(k) + " has dimension " +
                     std::to_string(flag[k].dim()));
    }
    if (k > 0 && !flag[k].contains(flag[k - 1])) {
      throw NotAFlag("member " + std::to_string(k) + " does not contain its predecessor");
    }
  }
  for (int k = 0; k <= d; ++k) {
    if (!is_ideal(alg, flag[k])) throw NotIdeals(k);
  }

  Matrix b = skew_form(alg, psi).matrix;
  Subspace h = Subspace::zero(d);
  for (int k = 1; k <= d; ++k) {
    Matrix p = flag[k].basis_matrix();       // k x d
    Matrix gram = p * b * p.transpose();     // B restricted to F_k
    Subspace radical = kernel(gram);
    std::vector<Vec> lifts;
    for (const auto& cvec : radical.basis()) {
      lifts.push_back(p.transpose().apply(cvec));  // radical vector inside F_k
    }
    h = h + Subspace::span(d, lifts);
  }

  Polarization out;
  out.subspace = h;
  out.flag_used = flag;
  out.subordinate_certificate = is_subordinate(alg, psi, h);
  out.maximal_certificate = 2 * h.dim() == 2 * d - orbit_dimension(alg, psi);
  return out;
}

std::vector<Subspace> default_ideal_flag(const NilpotentLieAlgebra& alg, bool reverse) {
  const auto& series = alg.lower_central_series();
  int d = alg.dim();
  std::vector<Subspace> flag;
  Subspace current = Subspace::zero(d);
  flag.push_back(current);
  // Walk the series from the deepest nonzero term up to the full algebra,
  // inserting one basis row at a time. Every intermediate space contains the
  // next series term, so each is automatically an ideal.
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    std::vector<Vec> rows = it->basis();
    if (reverse) std::reverse(rows.begin(), rows.end());
    for (const auto& row : rows) {
      if (current.contains(row)) continue;
      current = current + Subspace::span(d, {row});
      flag.push_back(current);
    }
  }
  return flag;
}

bool stabilizes_flag(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                     const Subspace& s, const Subspace& h) {
  if (levi.algebra_dim != alg.dim()) throw AlgebraMismatch();
  if (s.ambient_dim() != levi.levi_dim) {
    throw std::invalid_argument("s must live in Levi coordinates");
  }
  if (h.ambient_dim() != alg.dim()) {
    throw std::invalid_argument("h must live in algebra coordinates");
  }
  for (const auto& x : s.basis()) {
    Matrix d = levi.action_of(x);
    for (const auto& row : h.basis()) {
      if (!h.contains(d.apply(row))) return false;
    }
  }
  return true;
}

}  // namespace coorbit
