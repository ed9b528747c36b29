#include "coorbit/levi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace coorbit {

namespace {

std::string coord_label(int i, int j) {
  return "e_" + std::to_string(i) + "," + std::to_string(j);
}

// Covectors psi o D_k, one column per Levi basis direction. The Lie action is
// X.psi = -psi o D_X; the sign drops out of every span and rank built from
// this matrix.
Matrix levi_motion_columns(const WeightedLeviAction& levi, const Functional& psi) {
  Matrix m(levi.algebra_dim, levi.levi_dim);
  for (int k = 0; k < levi.levi_dim; ++k) {
    Vec column = levi.action[static_cast<size_t>(k)].transpose().apply(psi.coeffs);
    for (int i = 0; i < levi.algebra_dim; ++i) m.at(i, k) = column[static_cast<size_t>(i)];
  }
  return m;
}

void require_compatible(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi) {
  if (levi.algebra_dim != alg.dim())
    throw std::invalid_argument("Levi action was built for a different algebra dimension");
}

}  // namespace

RootDatum root_datum_gl_upper(int n) {
  if (n < 2) throw std::invalid_argument("root_datum_gl_upper needs n >= 2");
  RootDatum d;
  d.group = RootGroup::GL;
  d.rank = n;
  const auto pairs = gl_pairs(n);
  for (int idx = 0; idx < static_cast<int>(pairs.size()); ++idx) {
    const auto [i, j] = pairs[static_cast<size_t>(idx)];
    RootEntry e;
    e.label = coord_label(i, j);
    e.weight.assign(static_cast<size_t>(n), 0);
    e.weight[static_cast<size_t>(i - 1)] += 1;
    e.weight[static_cast<size_t>(j - 1)] -= 1;
    e.coord = idx;
    d.roots.push_back(std::move(e));
    if (j == i + 1) d.simple_roots.push_back(idx);
  }
  return d;
}

RootDatum root_datum_sp(int n) {
  if (n < 2) throw std::invalid_argument("root_datum_sp needs n >= 2");
  RootDatum d;
  d.group = RootGroup::Sp;
  d.rank = n;
  const auto positions = sp_fundamental_positions(n);
  for (int idx = 0; idx < static_cast<int>(positions.size()); ++idx) {
    const auto [i, j] = positions[static_cast<size_t>(idx)];
    RootEntry e;
    e.label = coord_label(i, j);
    e.weight.assign(static_cast<size_t>(n), 0);
    e.weight[static_cast<size_t>(i - 1)] += 1;
    if (j <= n) {
      e.weight[static_cast<size_t>(j - 1)] -= 1;  // epsilon_i - epsilon_j
    } else {
      e.weight[static_cast<size_t>(2 * n - j)] += 1;  // epsilon_i + epsilon_{2n+1-j}
    }
    e.coord = idx;
    d.roots.push_back(std::move(e));
    const bool short_simple = (j == i + 1) && (i < n);
    const bool long_simple = (i == n) && (j == n + 1);  // 2 epsilon_n
    if (short_simple || long_simple) d.simple_roots.push_back(idx);
  }
  return d;
}

Subspace levi_orbit_stabilizer_lie(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                   const Functional& psi) {
  require_same_algebra(alg, psi);
  require_compatible(alg, levi);
  const Subspace tangent = Subspace::row_space(skew_form(alg, psi).matrix);
  return preimage(levi_motion_columns(levi, psi), tangent);
}

int p_orbit_dimension(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                      const Functional& psi) {
  require_same_algebra(alg, psi);
  require_compatible(alg, levi);
  const Matrix b = skew_form(alg, psi).matrix;
  const Matrix levi_rows = levi_motion_columns(levi, psi).transpose();
  return rank(vstack(b, levi_rows));
}

std::optional<Functional> cocharacter_limit(const NilpotentLieAlgebra& alg,
                                            const WeightedLeviAction& levi,
                                            const std::vector<long long>& lambda,
                                            const Functional& psi) {
  require_same_algebra(alg, psi);
  require_compatible(alg, levi);
  if (static_cast<int>(lambda.size()) != levi.levi_dim)
    throw std::invalid_argument("cocharacter length must equal the Levi dimension");
  if (!levi.is_diagonal())
    throw std::invalid_argument("cocharacter limits need a diagonal Levi action");
  const std::vector<Vec> weights = levi.coordinate_weights();
  Vec out = psi.coeffs;
  for (int j = 0; j < alg.dim(); ++j) {
    if (psi.coeffs[static_cast<size_t>(j)] == 0) continue;
    Rat w(0);
    for (int k = 0; k < levi.levi_dim; ++k)
      w -= Rat(lambda[static_cast<size_t>(k)]) * weights[static_cast<size_t>(j)][static_cast<size_t>(k)];
    if (w < 0) return std::nullopt;
    if (w > 0) out[static_cast<size_t>(j)] = 0;
  }
  return make_functional(alg, std::move(out));
}

DegenerationCertificate check_horizontal(const NilpotentLieAlgebra& alg,
                                         const WeightedLeviAction& levi, const Functional& psi,
                                         const Functional& psi0,
                                         const std::vector<long long>& lambda) {
  require_same_algebra(alg, psi);
  require_same_algebra(alg, psi0);
  require_compatible(alg, levi);
  if (static_cast<int>(lambda.size()) != levi.levi_dim)
    throw std::invalid_argument("cocharacter length must equal the Levi dimension");
  if (psi.is_zero_functional() || psi0.is_zero_functional()) throw TrivialFunctional();

  DegenerationCertificate cert;
  cert.psi = psi;
  cert.psi0 = psi0;
  cert.lambda_weights = lambda;
  cert.checks.distinct_orbits = !same_orbit(alg, psi, psi0).has_value();
  cert.checks.equal_orbit_dims = orbit_dimension(alg, psi) == orbit_dimension(alg, psi0);
  const auto limit = cocharacter_limit(alg, levi, lambda, psi);
  cert.checks.limit_matches = limit.has_value() && limit->coeffs == psi0.coeffs;

  Vec lam(static_cast<size_t>(levi.levi_dim), Rat(0));
  for (int k = 0; k < levi.levi_dim; ++k) lam[static_cast<size_t>(k)] = Rat(lambda[static_cast<size_t>(k)]);
  bool commutes = true;
  Subspace stab = levi_orbit_stabilizer_lie(alg, levi, psi);
  for (const Vec& s : stab.basis()) {
    if (!is_zero(levi.levi_bracket(lam, s))) {
      commutes = false;
      break;
    }
  }
  cert.checks.lambda_commutes_with_stabilizer = commutes;
  return cert;
}

DegenerationCertificate check_simple(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                     const RootDatum& roots, const Functional& psi,
                                     const Functional& psi0, const std::vector<long long>& lambda) {
  if (static_cast<int>(roots.roots.size()) != alg.dim())
    throw std::invalid_argument("root datum does not cover the algebra coordinates");
  DegenerationCertificate cert = check_horizontal(alg, levi, psi, psi0, lambda);
  if (!cert.horizontal()) {
    std::string why;
    if (!cert.checks.distinct_orbits) why = "the functionals lie on the same orbit";
    else if (!cert.checks.equal_orbit_dims) why = "the orbit dimensions differ";
    else if (!cert.checks.limit_matches) why = "the cocharacter limit does not reach the target";
    else why = "the cocharacter does not commute with the orbit stabilizer";
    throw NotHorizontal(why);
  }

  SimpleChecks sc;
  sc.p_orbit_dim_drop_one =
      p_orbit_dimension(alg, levi, psi) == p_orbit_dimension(alg, levi, psi0) + 1;

  const Vec delta = sub(psi.coeffs, psi0.coeffs);
  int support = -1;
  bool single = true;
  for (int j = 0; j < alg.dim(); ++j) {
    if (delta[static_cast<size_t>(j)] == 0) continue;
    if (support >= 0) {
      single = false;
      break;
    }
    support = j;
  }

  bool simple_and_orthogonal = false;
  if (single && support >= 0) {
    int root_idx = -1;
    for (int idx = 0; idx < static_cast<int>(roots.roots.size()); ++idx) {
      if (roots.roots[static_cast<size_t>(idx)].coord == support) {
        root_idx = idx;
        break;
      }
    }
    if (root_idx >= 0) {
      // The dual coordinate at `support` pairs with the opposite root vector,
      // so delta is a multiple of a negative root; it qualifies when the
      // underlying positive root is simple and orthogonal to every simple
      // root selected by the parabolic set J.
      sc.delta_root_label = roots.roots[static_cast<size_t>(root_idx)].label;
      const bool is_simple = std::find(roots.simple_roots.begin(), roots.simple_roots.end(),
                                       root_idx) != roots.simple_roots.end();
      bool orthogonal = true;
      const std::vector<int>& w = roots.roots[static_cast<size_t>(root_idx)].weight;
      for (int jj : roots.parabolic_J) {
        const std::vector<int>& wj =
            roots.roots[static_cast<size_t>(roots.simple_roots[static_cast<size_t>(jj)])].weight;
        long long pairing = 0;
        for (int t = 0; t < roots.rank; ++t)
          pairing += static_cast<long long>(w[static_cast<size_t>(t)]) * wj[static_cast<size_t>(t)];
        if (pairing != 0) {
          orthogonal = false;
          break;
        }
      }
      simple_and_orthogonal = is_simple && orthogonal;
    }
  }
  sc.delta_is_simple_negative_root_multiple_orthogonal_to_J = simple_and_orthogonal;
  cert.simple_checks = sc;
  return cert;
}

bool stabilizer_monotonicity_check(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                   const Functional& psi, const Functional& psi0) {
  return levi_orbit_stabilizer_lie(alg, levi, psi0)
      .contains(levi_orbit_stabilizer_lie(alg, levi, psi));
}

std::vector<std::vector<long long>> search_cocharacters(const NilpotentLieAlgebra& alg,
                                                        const WeightedLeviAction& levi,
                                                        const Functional& psi,
                                                        const Functional& psi0, int bound) {
  if (bound < 0) throw std::invalid_argument("search bound must be >= 0");
  require_compatible(alg, levi);
  std::vector<std::vector<long long>> found;
  std::vector<long long> lam(static_cast<size_t>(levi.levi_dim), -static_cast<long long>(bound));
  while (true) {
    if (check_horizontal(alg, levi, psi, psi0, lam).horizontal()) found.push_back(lam);
    int pos = levi.levi_dim - 1;
    while (pos >= 0 && lam[static_cast<size_t>(pos)] == bound) {
      lam[static_cast<size_t>(pos)] = -static_cast<long long>(bound);
      --pos;
    }
    if (pos < 0) break;
    ++lam[static_cast<size_t>(pos)];
  }
  return found;
}

std::vector<Matrix> double_coset_reps(int n) {
  if (n < 4) throw std::invalid_argument("double_coset_reps needs n >= 4");
  std::vector<Matrix> reps;
  reps.push_back(Matrix::identity(n));
  // Block permutation for the partition (1, k, 1, n-k-2): the single middle
  // row jumps ahead of the k-block.
  for (int k = 1; k <= n - 3; ++k) {
    Matrix p(n, n);
    p.at(0, 0) = 1;
    p.at(1, k + 1) = 1;
    for (int r = 1; r <= k; ++r) p.at(1 + r, r) = 1;
    for (int i = k + 2; i < n; ++i) p.at(i, i) = 1;
    reps.push_back(std::move(p));
  }
  return reps;
}

std::vector<Matrix> inner_coset_reps(int n) {
  if (n < 5) throw std::invalid_argument("inner_coset_reps needs n >= 5");
  std::vector<Matrix> reps;
  reps.push_back(Matrix::identity(n));
  // Same shape one level deeper: partition (1, 1, l, 1, n-l-3).
  for (int l = 1; l <= n - 4; ++l) {
    Matrix p(n, n);
    p.at(0, 0) = 1;
    p.at(1, 1) = 1;
    p.at(2, l + 2) = 1;
    for (int r = 1; r <= l; ++r) p.at(2 + r, 1 + r) = 1;
    for (int i = l + 3; i < n; ++i) p.at(i, i) = 1;
    reps.push_back(std::move(p));
  }
  return reps;
}

}  // namespace coorbit
