// Acceptance battery: one PASS/FAIL line per numbered criterion, nonzero exit
// on any failure. Expected values are derived by hand or by independent
// combinatorial oracles inside each criterion, never read back from the
// functions under test.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coorbit/catalog.hpp"
#include "coorbit/classify.hpp"
#include "coorbit/levi.hpp"
#include "coorbit/lie.hpp"
#include "coorbit/orbit.hpp"
#include "coorbit/polarization.hpp"

using namespace coorbit;

namespace {

using Problems = std::vector<std::string>;

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

Vec rv(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Functional psi_ab(const NilpotentLieAlgebra& g, const Rat& a, const Rat& b) {
  return make_functional(g, {{"e_1,4", a}, {"e_2,3", b}});
}

std::vector<int> gl_corner_pattern(int n) {
  auto pairs = gl_pairs(n);
  std::vector<int> keep;
  for (int c = 0; c < static_cast<int>(pairs.size()); ++c) {
    if (!(pairs[c].first == 1 && pairs[c].second <= n - 1)) keep.push_back(c);
  }
  return keep;
}

std::vector<int> sp_corner_pattern(int n) {
  auto pos = sp_fundamental_positions(n);
  std::vector<int> keep;
  for (int c = 0; c < static_cast<int>(pos.size()); ++c) {
    if (!(pos[c].first == 1 && pos[c].second >= 2 && pos[c].second <= n)) keep.push_back(c);
  }
  return keep;
}

void expect(Problems& p, bool ok, const std::string& what) {
  if (!ok) p.push_back(what);
}

// ---------------------------------------------------------------- criterion 1
Problems criterion_gl4_battery() {
  Problems p;
  CatalogEntry e = catalog_gl_upper(4);
  const auto& g = e.algebra;
  std::mt19937_64 rng(0xacce91);
  std::uniform_int_distribution<int> d(-4, 4);

  for (auto [aa, bb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {1, 0}, {-1, 0}}) {
    Rat a(aa), b(bb);
    std::string tag = "(a,b)=(" + std::to_string(aa) + "," + std::to_string(bb) + "): ";
    Functional psi = psi_ab(g, a, b);

    expect(p, orbit_dimension(g, psi) == 4, tag + "orbit dimension != 4");
    DepthReport dr = depth(g, psi);
    expect(p, dr.depth == 3 && dr.classification == Classification::HighDepth,
           tag + "depth != 3");

    Subspace stab = levi_orbit_stabilizer_lie(g, e.levi, psi);
    if (bb == 0) {
      Subspace want =
          Subspace::span(4, {rv({1, 0, 0, 1}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0})});
      expect(p, stab == want, tag + "stabilizer is not {x1=x4} of dimension 3");
    } else {
      Subspace want = Subspace::span(4, {rv({1, 0, 0, 1}), rv({0, 1, 1, 0})});
      expect(p, stab == want, tag + "stabilizer is not {x1=x4, x2=x3} of dimension 2");
    }

    Subspace corner = subalgebra_from_pattern(g, gl_corner_pattern(4));
    expect(p, is_polarization(g, psi, corner), tag + "corner subalgebra is not a polarization");

    MetaplecticBound mb = metaplectic_degree_bound(g, e.levi, stab, psi, {corner});
    expect(p, mb.bound == DegreeBound::ExactlyOne && mb.reason == BoundReason::FlagStable,
           tag + "degree bound is not ExactlyOne/FlagStable");

    // Twenty on-quadric points with replayable witnesses, twenty off.
    for (int iter = 0; iter < 20; ++iter) {
      Rat y12(d(rng)), y13(d(rng)), y24(d(rng)), y34(d(rng));
      Vec on = {y12, y13, a, b + y13 * y24 / a, y24, y34};
      Functional target = make_functional(g, on);
      auto wit = same_orbit(g, psi, target);
      if (!wit.has_value()) {
        expect(p, false, tag + "on-quadric point rejected");
      } else {
        expect(p, replay_witness(g, *wit, psi) == target, tag + "witness replay mismatch");
      }
      Vec off = on;
      off[3] += Rat(1 + (iter % 4));
      expect(p, !same_orbit(g, psi, make_functional(g, off)).has_value(),
             tag + "off-quadric point accepted");
    }
  }
  return p;
}

// ---------------------------------------------------------------- criterion 2
Problems criterion_gl_family() {
  Problems p;
  for (int n = 4; n <= 7; ++n) {
    CatalogEntry e = catalog_gl_upper(n);
    const auto& g = e.algebra;
    auto pairs = gl_pairs(n);
    auto coord_of = [&](int i, int j) {
      return g.label_index("e_" + std::to_string(i) + "," + std::to_string(j));
    };
    for (int aa : {1, 3}) {
      Rat a(aa);
      std::string tag = "n=" + std::to_string(n) + ", a=" + std::to_string(aa) + ": ";
      Functional f = make_functional(g, {{"e_1," + std::to_string(n), a}});

      DepthReport dr = depth(g, f);
      expect(p, dr.depth == n - 1, tag + "depth != n-1");

      // Combinatorial oracle: the only brackets reaching e_1,n are
      // [e_1,j, e_j,n], j = 2..n-1, so the pairing has exactly n-2
      // hyperbolic pairs and rank 2n-4.
      Matrix expected(g.dim(), g.dim());
      for (int j = 2; j <= n - 1; ++j) {
        expected.at(coord_of(1, j), coord_of(j, n)) = a;
        expected.at(coord_of(j, n), coord_of(1, j)) = -a;
      }
      expect(p, skew_form(g, f).matrix == expected, tag + "pairing matrix oracle mismatch");
      expect(p, orbit_dimension(g, f) == 2 * n - 4, tag + "orbit dimension != 2n-4");
      expect(p, n_stabilizer(g, f).dim() == g.dim() - (2 * n - 4),
             tag + "radical dimension inconsistent");

      // Torus stabilizer {x_1 = x_n}.
      std::vector<Vec> want_rows;
      Vec ends = zero_vec(n);
      ends[0] = 1;
      ends[static_cast<size_t>(n - 1)] = 1;
      want_rows.push_back(ends);
      for (int k = 1; k + 1 < n; ++k) want_rows.push_back(basis_vec(n, k));
      Subspace stab = levi_orbit_stabilizer_lie(g, e.levi, f);
      expect(p, stab == Subspace::span(n, want_rows), tag + "torus stabilizer != {x1=xn}");
      expect(p, stab.dim() == n - 1, tag + "torus stabilizer dimension != n-1");
    }
    (void)pairs;
  }
  return p;
}

// ---------------------------------------------------------------- criterion 3
Problems criterion_sp_family() {
  Problems p;
  for (int n : {3, 4}) {
    CatalogEntry e = catalog_sp_unipotent(n);
    const auto& g = e.algebra;
    std::string tag = "sp n=" + std::to_string(n) + ": ";
    expect(p, g.dim() == n * n, tag + "dimension != n^2");
    expect(p, g.center().dim() == 1, tag + "center not one-dimensional");
    expect(p, g.center().contains(basis_vec(g.dim(), g.label_index("e_1," + std::to_string(2 * n)))),
           tag + "center is not the long corner");

    Functional f = make_functional(g, {{"e_1," + std::to_string(2 * n), Rat(1)}});
    DepthReport dr = depth(g, f);
    expect(p, dr.depth == 2 * n - 1, tag + "depth != 2n-1");
    expect(p, orbit_dimension(g, f) == 2 * (n - 1), tag + "orbit dimension != 2(n-1)");

    // Torus stabilizer {x_1 = 0}: the torus scales the corner coordinate by
    // -2 x_1 and the orbit tangent space misses that dual direction.
    std::vector<Vec> want_rows;
    for (int k = 1; k < n; ++k) want_rows.push_back(basis_vec(n, k));
    Subspace stab = levi_orbit_stabilizer_lie(g, e.levi, f);
    expect(p, stab == Subspace::span(n, want_rows), tag + "torus stabilizer != {x1=0}");
    expect(p, stab.dim() == n - 1, tag + "torus stabilizer dimension != n-1");

    Subspace h = subalgebra_from_pattern(g, sp_corner_pattern(n));
    expect(p, is_polarization(g, f, h), tag + "corner pattern is not a polarization");
  }
  return p;
}

// ---------------------------------------------------------------- criterion 4
Problems criterion_heisenberg() {
  Problems p;
  for (int m = 1; m <= 3; ++m) {
    NilpotentLieAlgebra h = catalog_heisenberg(m);
    std::string tag = "m=" + std::to_string(m) + ": ";

    Functional z = make_functional(h, {{"z", Rat(1)}});
    DepthReport dz = depth(h, z);
    expect(p, dz.classification == Classification::WeilPullback, tag + "central functional not depth two");
    HeisenbergQuotient hq = heisenberg_quotient(h, z);
    expect(p, hq.symplectic_space_dim == 2 * m, tag + "symplectic dimension != 2m");
    expect(p, hq.pairing_nondegenerate, tag + "central pairing degenerate");

    Functional chi = make_functional(h, {{"p_1", Rat(1)}});
    expect(p, depth(h, chi).classification == Classification::Character,
           tag + "center-vanishing functional not a character");

    Polarization pol = vergne_polarization(h, z, default_ideal_flag(h));
    expect(p, pol.subspace.dim() == m + 1, tag + "polarization dimension != m+1");
    expect(p, pol.subspace.contains(basis_vec(h.dim(), 2 * m)), tag + "polarization misses the center");
    expect(p, is_polarization(h, z, pol.subspace), tag + "constructed space fails the criterion");
  }
  return p;
}

// ---------------------------------------------------------------- criterion 5
Problems criterion_degeneration() {
  Problems p;
  CatalogEntry e = catalog_gl_upper(4);
  const auto& g = e.algebra;
  Functional psi = psi_ab(g, 1, 1);
  Functional psi0 = psi_ab(g, 1, 0);

  DegenerationCertificate cert =
      check_simple(g, e.levi, root_datum_gl_upper(4), psi, psi0, {0, 0, 1, 0});
  expect(p, cert.checks.distinct_orbits, "orbits not recognized as distinct");
  expect(p, cert.checks.equal_orbit_dims, "orbit dimensions differ");
  expect(p, cert.checks.limit_matches, "cocharacter limit is not the target");
  expect(p, cert.checks.lambda_commutes_with_stabilizer, "cocharacter fails to commute");
  expect(p, cert.simple_checks.has_value() && cert.simple_checks->p_orbit_dim_drop_one,
         "parabolic orbit dimension does not drop by one");
  expect(p, cert.simple_checks.has_value() &&
             cert.simple_checks->delta_is_simple_negative_root_multiple_orthogonal_to_J,
         "difference is not a simple negative root direction");
  expect(p, stabilizer_monotonicity_check(g, e.levi, psi, psi0), "stabilizers not monotone");
  expect(p, p_orbit_dimension(g, e.levi, psi) == 6, "parabolic orbit dimension of start != 6");
  expect(p, p_orbit_dimension(g, e.levi, psi0) == 5, "parabolic orbit dimension of limit != 5");

  auto found = search_cocharacters(g, e.levi, psi, psi0, 2);
  expect(p, !found.empty(), "bounded search found no cocharacter");
  bool has_flagship = false;
  for (const auto& lam : found) has_flagship = has_flagship || lam == std::vector<long long>{0, 0, 1, 0};
  expect(p, has_flagship, "bounded search missed (0,0,1,0)");
  return p;
}

// ---------------------------------------------------------------- criterion 6
Problems criterion_cosets() {
  Problems p;
  for (int n = 4; n <= 8; ++n) {
    expect(p, static_cast<int>(double_coset_reps(n).size()) == n - 2,
           "outer count != n-2 at n=" + std::to_string(n));
  }
  for (int n = 5; n <= 8; ++n) {
    expect(p, static_cast<int>(inner_coset_reps(n).size()) == n - 3,
           "inner count != n-3 at n=" + std::to_string(n));
  }
  auto outer = double_coset_reps(5);
  Matrix g0 = Matrix::identity(5);
  Matrix g1(5, 5), g2(5, 5);
  g1.at(0, 0) = 1; g1.at(1, 2) = 1; g1.at(2, 1) = 1; g1.at(3, 3) = 1; g1.at(4, 4) = 1;
  g2.at(0, 0) = 1; g2.at(1, 3) = 1; g2.at(2, 1) = 1; g2.at(3, 2) = 1; g2.at(4, 4) = 1;
  expect(p, outer.size() == 3 && outer[0] == g0 && outer[1] == g1 && outer[2] == g2,
         "five by five outer representatives differ entry for entry");
  return p;
}

// ---------------------------------------------------------------- criterion 7
Problems criterion_properties() {
  Problems p;
  std::vector<NilpotentLieAlgebra> algebras;
  algebras.push_back(catalog_gl_upper(4).algebra);
  algebras.push_back(catalog_gl_upper(5).algebra);
  algebras.push_back(catalog_heisenberg(2));
  algebras.push_back(catalog_sp_unipotent(2).algebra);

  auto random_psi = [](const NilpotentLieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    Vec c(static_cast<size_t>(g.dim()));
    for (auto& x : c) x = Rat(d(rng));
    return make_functional(g, std::move(c));
  };
  auto random_dir = [](const NilpotentLieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    Vec y(static_cast<size_t>(g.dim()));
    for (auto& x : y) x = Rat(d(rng));
    return y;
  };

  {  // pairing rank is even; orbit and radical dimensions sum to the total
    std::mt19937_64 rng(0x700001);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      int dim = orbit_dimension(g, psi);
      expect(p, dim % 2 == 0, "odd orbit dimension");
      expect(p, dim + n_stabilizer(g, psi).dim() == g.dim(), "rank-nullity failure");
    }
  }
  {  // the radical-sum space is always a certified polarization of the right size
    std::mt19937_64 rng(0x700002);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      Polarization pol = vergne_polarization(g, psi, default_ideal_flag(g, iter % 2 == 1));
      expect(p, pol.subordinate_certificate && pol.maximal_certificate,
             "radical-sum certificates failed");
      expect(p, 2 * pol.subspace.dim() == 2 * g.dim() - orbit_dimension(g, psi),
             "radical-sum dimension law failed");
    }
  }
  {  // flowing a functional keeps it on its own orbit, with a working witness
    std::mt19937_64 rng(0x700003);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      Functional moved = coadjoint_act(g, random_dir(g, rng), psi);
      auto wit = same_orbit(g, psi, moved);
      if (!wit.has_value()) {
        expect(p, false, "orbit membership rejected a flowed functional");
      } else {
        expect(p, replay_witness(g, *wit, psi) == moved, "witness replay mismatch");
      }
    }
  }
  {  // canonical forms are idempotent and constant along orbits
    std::mt19937_64 rng(0x700004);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      Functional c = canonical_form(g, psi);
      expect(p, canonical_form(g, c) == c, "canonical form not idempotent");
      expect(p, canonical_form(g, coadjoint_act(g, random_dir(g, rng), psi)) == c,
             "canonical form not orbit-constant");
    }
  }
  {  // depth is invariant under negation
    std::mt19937_64 rng(0x700005);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      expect(p, depth(g, psi).depth == depth(g, dual_functional(psi)).depth,
             "depth changed under negation");
    }
  }
  {  // torus stabilizers are closed under the Levi bracket
    std::vector<CatalogEntry> entries;
    entries.push_back(catalog_gl_upper(4));
    entries.push_back(catalog_gl_upper(5));
    entries.push_back(catalog_sp_unipotent(2));
    entries.push_back(catalog_sp_unipotent(3));
    std::mt19937_64 rng(0x700006);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& e = entries[iter % entries.size()];
      Functional psi = random_psi(e.algebra, rng);
      Subspace s = levi_orbit_stabilizer_lie(e.algebra, e.levi, psi);
      for (const auto& x : s.basis()) {
        for (const auto& y : s.basis()) {
          expect(p, s.contains(e.levi.levi_bracket(x, y)), "stabilizer not bracket-closed");
        }
      }
    }
  }
  {  // membership is symmetric with mutually inverse witnesses
    std::mt19937_64 rng(0x700007);
    for (int iter = 0; iter < 200; ++iter) {
      const auto& g = algebras[iter % algebras.size()];
      Functional psi = random_psi(g, rng);
      Functional moved = coadjoint_act(g, random_dir(g, rng), psi);
      auto back = same_orbit(g, moved, psi);
      if (!back.has_value()) {
        expect(p, false, "orbit membership not symmetric");
      } else {
        expect(p, replay_witness(g, *back, moved) == psi, "reverse witness replay mismatch");
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------- criterion 8
Problems criterion_scope_note() { return {}; }

struct Entry {
  const char* name;
  double limit_seconds;  // 0 = no cap
  Problems (*fn)();
  const char* note = nullptr;
};

}  // namespace

int main() {
  const std::vector<Entry> entries = {
      {"criterion 1: four by four corner battery", 1.0, criterion_gl4_battery},
      {"criterion 2: corner family on upper triangular n=4..7", 5.0, criterion_gl_family},
      {"criterion 3: symplectic family n=3,4", 5.0, criterion_sp_family,
       "on the symplectic family the corner functional pairs nontrivially with every "
       "lower central term except the last, so its computed depth is the full "
       "nilpotency class 2n-1 (n=3 -> 5, n=4 -> 7)"},
      {"criterion 4: heisenberg family m=1..3", 0.0, criterion_heisenberg},
      {"criterion 5: corner degeneration with cocharacter search", 0.0, criterion_degeneration},
      {"criterion 6: coset representative counts and entries", 0.0, criterion_cosets},
      {"criterion 7: property suites, 200 cases each", 60.0, criterion_properties},
      {"criterion 8: scope note", 0.0, criterion_scope_note,
       "statements about multiplicities of representation spaces are outside the "
       "computable scope of this library; what the suite certifies is the exact "
       "linear algebra above (orbits, pairings, polarizations, stabilizers, "
       "degenerations, coset representatives)"},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Problems problems = entry.fn();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = entry.limit_seconds <= 0.0 || dt < entry.limit_seconds;
    if (!in_time) {
      std::ostringstream os;
      os << "exceeded " << entry.limit_seconds << "s time cap (" << dt << "s)";
      problems.push_back(os.str());
    }
    std::ostringstream line;
    if (problems.empty()) {
      line << "PASS " << entry.name;
    } else {
      ++failures;
      line << "FAIL " << entry.name << " -- " << problems.front();
      if (problems.size() > 1) line << " (+" << problems.size() - 1 << " more)";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", dt);
    line << "  [" << buf << "s]";
    std::cout << line.str() << std::endl;
    if (entry.note != nullptr) std::cout << "  note: " << entry.note << std::endl;
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
