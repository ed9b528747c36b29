#include "coorbit/orbit.hpp"

namespace coorbit {

namespace {

/// exp(M) for a nilpotent matrix; throws std::domain_error otherwise.
Matrix exp_nilpotent(const Matrix& m) {
  int n = m.rows;
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Rat factorial(1);
  for (int k = 1; k <= n; ++k) {
    power = power * m;
    if (power.is_zero()) return sum + power;  // series ended early
    factorial *= k;
    sum = sum + power.scaled(Rat(1) / factorial);
  }
  // An n x n nilpotent matrix satisfies M^n = 0; surviving this far means the
  // action is not nilpotent and the series would not terminate.
  throw std::domain_error("exponential does not terminate: action is not nilpotent");
}

Vec pullback(const Matrix& transform, const Vec& coeffs) {
  // (psi o T) has coefficient vector T^t . coeffs.
  return transform.transpose().apply(coeffs);
}

/// Solves B y = delta (mod complement) for y; the congruence is realized by
/// augmenting with a basis of the complement subspace.
std::optional<Vec> solve_mod(const Matrix& b, const Vec& delta, const Subspace& complement) {
  Matrix aug = b;
  if (complement.dim() > 0) aug = hstack(b, complement.basis_matrix().transpose());
  auto sol = solve(aug, delta);
  if (!sol) return std::nullopt;
  Vec y(sol->particular.begin(), sol->particular.begin() + b.cols);
  return y;
}

}  // namespace

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(s.basis_matrix());
}

std::vector<Subspace> dual_layer_filtration(const NilpotentLieAlgebra& alg) {
  const auto& series = alg.lower_central_series();
  std::vector<Subspace> layers;
  for (auto it = series.rbegin(); it != series.rend(); ++it) layers.push_back(annihilator(*it));
  return layers;  // layers[j] = annihilator(series[c - j])
}

Functional coadjoint_act(const NilpotentLieAlgebra& alg, const Vec& y, const Functional& psi) {
  require_same_algebra(alg, psi);
  Matrix a = exp_nilpotent(alg.ad(y).scaled(Rat(-1)));
  return make_functional(alg, pullback(a, psi.coeffs));
}

SkewForm skew_form(const NilpotentLieAlgebra& alg, const Functional& psi) {
  require_same_algebra(alg, psi);
  int d = alg.dim();
  Matrix b(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Rat v = psi.evaluate(alg.bracket_basis(i, j));
      b.at(i, j) = v;
      b.at(j, i) = -v;
    }
  }
  return SkewForm{std::move(b)};
}

int orbit_dimension(const NilpotentLieAlgebra& alg, const Functional& psi) {
  return rank(skew_form(alg, psi).matrix);
}

Subspace n_stabilizer(const NilpotentLieAlgebra& alg, const Functional& psi) {
  return kernel(skew_form(alg, psi).matrix);
}

std::optional<std::vector<Vec>> same_orbit(const NilpotentLieAlgebra& alg, const Functional& psi1,
                                           const Functional& psi2) {
  require_same_algebra(alg, psi1);
  require_same_algebra(alg, psi2);

  // Layered solve: maintain current with (psi2 - current) in G_j, and per
  // layer find y with B_current y = (psi2 - current) mod G_{j+1}. Such a y
  // moves current into the next congruence class exactly (the higher series
  // terms of exp land in G_{j+1} because the Lie action maps G_j there), and
  // when no y exists the orbits are distinct: any group element carrying
  // current to psi2 would have a logarithm solving this very system, since
  // stabilizers of points in the quotient actions are connected.
  std::vector<Subspace> layers = dual_layer_filtration(alg);
  int c = static_cast<int>(layers.size()) - 1;
  Functional current = psi1;
  std::vector<Vec> witness;

  if (c >= 1 && !layers[1].contains(sub(psi2.coeffs, current.coeffs))) {
    return std::nullopt;  // functionals differ on the deepest central layer
  }
  for (int j = 1; j < c; ++j) {
    Vec delta = sub(psi2.coeffs, current.coeffs);
    Matrix b = skew_form(alg, current).matrix;
    auto y = solve_mod(b, delta, layers[j + 1]);
    if (!y) return std::nullopt;
    if (!is_zero(*y)) {
      current = coadjoint_act(alg, *y, current);
      witness.push_back(std::move(*y));
    }
  }
  if (current.coeffs != psi2.coeffs) return std::nullopt;  // c <= 1 edge cases
  return witness;
}

Functional replay_witness(const NilpotentLieAlgebra& alg, const std::vector<Vec>& witness,
                          const Functional& psi) {
  Functional current = psi;
  for (const auto& y : witness) current = coadjoint_act(alg, y, current);
  return current;
}

Functional canonical_form(const NilpotentLieAlgebra& alg, const Functional& psi) {
  require_same_algebra(alg, psi);
  std::vector<Subspace> layers = dual_layer_filtration(alg);
  int c = static_cast<int>(layers.size()) - 1;
  Functional current = psi;

  for (int j = 1; j < c; ++j) {
    Matrix b = skew_form(alg, current).matrix;
    // Directions reachable without leaving the current G_j congruence class:
    // B applied to {y : B y in G_j}, plus the finer layer.
    Subspace flows = preimage(b, layers[j]);
    std::vector<Vec> dirs;
    for (const auto& y : flows.basis()) dirs.push_back(b.apply(y));
    Subspace reachable = Subspace::span(alg.dim(), dirs) + layers[j + 1];
    Vec target = reachable.reduce(current.coeffs);
    auto y = solve_mod(b, sub(target, current.coeffs), layers[j + 1]);
    if (!y) throw std::logic_error("canonical_form: reachable target must be solvable");
    if (!is_zero(*y)) current = coadjoint_act(alg, *y, current);
  }
  return current;
}

Functional dual_functional(const Functional& psi) {
  Functional out = psi;
  out.coeffs = scale(Rat(-1), out.coeffs);
  return out;
}

Functional conjugate_functional(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                const Vec& g_log, const Functional& psi) {
  require_same_algebra(alg, psi);
  if (levi.algebra_dim != alg.dim()) throw AlgebraMismatch();
  Matrix a = exp_nilpotent(levi.action_of(g_log));
  return make_functional(alg, pullback(a, psi.coeffs));
}

Functional torus_conjugate(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                           const std::vector<Rat>& t, const Functional& psi) {
  require_same_algebra(alg, psi);
  if (levi.algebra_dim != alg.dim()) throw AlgebraMismatch();
  if (static_cast<int>(t.size()) != levi.levi_dim) {
    throw std::invalid_argument("torus point has wrong number of coordinates");
  }
  for (const auto& tk : t) {
    if (tk == 0) throw std::invalid_argument("torus point coordinates must be nonzero");
  }
  std::vector<Vec> weights = levi.coordinate_weights();
  Vec out = psi.coeffs;
  for (int j = 0; j < alg.dim(); ++j) {
    if (out[j] == 0) continue;
    Rat factor(1);
    for (int k = 0; k < levi.levi_dim; ++k) {
      const Rat& w = weights[j][k];
      if (denominator(w) != 1) {
        throw std::invalid_argument("torus weights must be integers for group-level conjugation");
      }
      Int e = numerator(w);
      // scale by t_k^{-e}
      Rat base = (e < 0) ? t[k] : Rat(1) / t[k];
      Int count = e < 0 ? Int(-e) : e;
      for (Int s = 0; s < count; ++s) factor *= base;
    }
    out[j] *= factor;
  }
  return make_functional(alg, std::move(out));
}

OrbitDescriptor orbit_descriptor(const NilpotentLieAlgebra& alg, const Functional& psi) {
  OrbitDescriptor d;
  d.representative = psi;
  d.dimension = orbit_dimension(alg, psi);
  d.n_stabilizer = n_stabilizer(alg, psi);
  d.canonical_form = canonical_form(alg, psi);
  return d;
}

}  // namespace coorbit
