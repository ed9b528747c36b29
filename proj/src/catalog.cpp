#include "coorbit/catalog.hpp"

namespace coorbit {

std::vector<std::pair<int, int>> gl_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  return pairs;
}

CatalogEntry catalog_gl_upper(int n) {
  if (n < 2) throw std::invalid_argument("catalog_gl_upper requires n >= 2");
  auto pairs = gl_pairs(n);
  int d = static_cast<int>(pairs.size());
  auto pos = [&](int i, int j) -> int {
    for (int k = 0; k < d; ++k)
      if (pairs[k] == std::make_pair(i, j)) return k;
    return -1;
  };

  std::vector<std::string> labels;
  for (auto [i, j] : pairs) labels.push_back("e_" + std::to_string(i) + "," + std::to_string(j));

  BracketTable table;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      SparseVec terms;
      // [E_ij, E_kl] = delta_{jk} E_il - delta_{li} E_kj
      if (j == k) terms.push_back({pos(i, l), Rat(1)});
      if (l == i) terms.push_back({pos(k, j), Rat(-1)});
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  }
  NilpotentLieAlgebra alg = make_algebra(d, std::move(labels), std::move(table));

  std::vector<Matrix> action;
  for (int k = 1; k <= n; ++k) {
    Matrix m(d, d);
    for (int c = 0; c < d; ++c) {
      auto [i, j] = pairs[c];
      m.at(c, c) = Rat((i == k ? 1 : 0) - (j == k ? 1 : 0));
    }
    action.push_back(std::move(m));
  }
  WeightedLeviAction levi = make_levi_action(alg, n, std::move(action), {});
  return CatalogEntry{std::move(alg), std::move(levi)};
}

std::vector<std::pair<int, int>> sp_fundamental_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pos.push_back({i, j});
    for (int l = n + 1; l <= 2 * n + 1 - i; ++l) pos.push_back({i, l});
  }
  return pos;
}

Matrix sp_representative(int n, int k) {
  auto pos = sp_fundamental_positions(n);
  auto [i, j] = pos.at(static_cast<size_t>(k));
  Matrix r(2 * n, 2 * n);
  r.at(i - 1, j - 1) = 1;
  int mi = 2 * n + 1 - j, mj = 2 * n + 1 - i;
  if (j <= n) {
    r.at(mi - 1, mj - 1) = -1;  // two-block type: E_{i,j} - E_{2n+1-j,2n+1-i}
  } else if (i + j < 2 * n + 1) {
    r.at(mi - 1, mj - 1) = 1;  // symmetric type: E_{i,j} + E_{2n+1-j,2n+1-i}
  }  // i + j = 2n+1: anti-diagonal position, single entry
  return r;
}

CatalogEntry catalog_sp_unipotent(int n) {
  if (n < 2) throw std::invalid_argument("catalog_sp_unipotent requires n >= 2");
  auto pos = sp_fundamental_positions(n);
  int d = static_cast<int>(pos.size());

  std::vector<std::string> labels;
  for (auto [i, j] : pos) labels.push_back("e_" + std::to_string(i) + "," + std::to_string(j));

  std::vector<Matrix> reps;
  for (int k = 0; k < d; ++k) reps.push_back(sp_representative(n, k));

  auto coords_of = [&](const Matrix& w) -> Vec {
    Vec c = zero_vec(d);
    for (int k = 0; k < d; ++k) c[k] = w.at(pos[k].first - 1, pos[k].second - 1);
    // The fundamental entries determine the element; confirm the readback
    // reproduces w exactly (i.e. w lies in the span of the basis).
    Matrix back(2 * n, 2 * n);
    for (int k = 0; k < d; ++k) {
      if (c[k] != 0) back = back + reps[k].scaled(c[k]);
    }
    if (!(back == w)) throw std::logic_error("sp catalog: commutator left the span");
    return c;
  };

  BracketTable table;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Vec c = coords_of(reps[a] * reps[b] - reps[b] * reps[a]);
      SparseVec terms;
      for (int k = 0; k < d; ++k) {
        if (c[k] != 0) terms.push_back({k, c[k]});
      }
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  }
  NilpotentLieAlgebra alg = make_algebra(d, std::move(labels), std::move(table));

  // Torus direction H_k = E_{k,k} - E_{2n+1-k,2n+1-k}; position (i,j) has
  // weight w_i - w_j with w = diag(H_k).
  std::vector<Matrix> action;
  for (int k = 1; k <= n; ++k) {
    Matrix m(d, d);
    for (int c = 0; c < d; ++c) {
      auto [i, j] = pos[c];
      auto w = [&](int r) { return Rat((r == k ? 1 : 0) - (r == 2 * n + 1 - k ? 1 : 0)); };
      m.at(c, c) = w(i) - w(j);
    }
    action.push_back(std::move(m));
  }
  WeightedLeviAction levi = make_levi_action(alg, n, std::move(action), {});
  return CatalogEntry{std::move(alg), std::move(levi)};
}

NilpotentLieAlgebra catalog_heisenberg(int m) {
  if (m < 1) throw std::invalid_argument("catalog_heisenberg requires m >= 1");
  int d = 2 * m + 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("p_" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("q_" + std::to_string(i));
  labels.push_back("z");
  BracketTable table;
  for (int i = 0; i < m; ++i) table[{i, m + i}] = {{2 * m, Rat(1)}};
  return make_algebra(d, std::move(labels), std::move(table));
}

}  // namespace coorbit
