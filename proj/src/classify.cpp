#include "coorbit/classify.hpp"

namespace coorbit {

DepthReport depth(const NilpotentLieAlgebra& alg, const Functional& psi) {
  require_same_algebra(alg, psi);
  const auto& series = alg.lower_central_series();
  DepthReport report;
  int n = 0;
  while (n < static_cast<int>(series.size()) && !psi.vanishes_on(series[n])) ++n;
  // series[n] is the first term psi kills; its subscript is n + 1.
  report.depth = n;
  report.vanishing_layer = n + 1;
  if (n == 0) {
    report.classification = Classification::TrivialFunctionalOrbit;
  } else if (n == 1) {
    report.classification = Classification::Character;
  } else if (n == 2) {
    report.classification = Classification::WeilPullback;
  } else {
    report.classification = Classification::HighDepth;
  }
  return report;
}

bool is_character(const NilpotentLieAlgebra& alg, const Functional& psi) {
  return depth(alg, psi).classification == Classification::Character;
}

HeisenbergQuotient heisenberg_quotient(const NilpotentLieAlgebra& alg, const Functional& psi) {
  DepthReport report = depth(alg, psi);
  if (report.depth != 2) throw WrongDepth(report.depth);

  HeisenbergQuotient out;
  // Working copies; each stage owns its algebra so the chain stays valid.
  NilpotentLieAlgebra current_alg = alg;
  Vec current = psi.coeffs;

  // Takes the ideal by value: callers may pass subspaces owned by the algebra
  // that the stage push replaces.
  auto push_stage = [&](Subspace ideal) {
    QuotientResult q = quotient(current_alg, ideal);
    // psi kills the ideal, so it descends: new coefficients live on the kept
    // coordinates (labelled sections).
    Vec pushed = zero_vec(q.algebra.dim());
    for (int a = 0; a < q.algebra.dim(); ++a) pushed[a] = current[q.kept_coords[a]];
    out.quotient_chain.push_back(ReducedStage{q.algebra, q.projection, pushed});
    current_alg = q.algebra;
    current = pushed;
  };

  // Step 1: kill the third lower-central term [n,[n,n]] (depth 2 means psi
  // vanishes there). Skip when already zero to keep the chain minimal.
  const auto& series = current_alg.lower_central_series();
  if (series.size() > 2 && series[2].dim() > 0) push_stage(series[2]);

  // Step 2: shrink the center to one dimension.
  while (true) {
    Subspace z = current_alg.center();
    Subspace killable = z.intersect(kernel(Matrix::from_rows({current}, current_alg.dim())));
    if (killable.dim() == 0) break;
    push_stage(killable);
  }

  out.final_algebra = current_alg;
  out.final_coeffs = current;

  Subspace z = out.final_algebra.center();
  if (z.dim() != 1) {
    throw std::logic_error("heisenberg_quotient: final center is not one-dimensional");
  }
  out.central_coefficient = dot(current, z.basis()[0]);

  // Commutator pairing on the abelianization (quotient by the center); the
  // pairing ignores central shifts, so sections by kept coordinates are fine.
  QuotientResult ab = quotient(out.final_algebra, z);
  int m2 = ab.algebra.dim();
  Matrix pairing(m2, m2);
  for (int a = 0; a < m2; ++a) {
    for (int b = a + 1; b < m2; ++b) {
      Rat v = dot(current, out.final_algebra.bracket_basis(ab.kept_coords[a], ab.kept_coords[b]));
      pairing.at(a, b) = v;
      pairing.at(b, a) = -v;
    }
  }
  out.symplectic_space_dim = m2;
  out.pairing_nondegenerate = rank(pairing) == m2;
  out.pairing = SkewForm{std::move(pairing)};
  return out;
}

MetaplecticBound metaplectic_degree_bound(const NilpotentLieAlgebra& alg,
                                          const WeightedLeviAction& levi, const Subspace& s,
                                          const Functional& psi,
                                          const std::vector<Subspace>& candidate_polarizations) {
  MetaplecticBound out;
  out.depth_report = depth(alg, psi);

  if (out.depth_report.classification == Classification::Character) {
    out.bound = DegreeBound::ExactlyOne;
    out.reason = BoundReason::Character;
    return out;
  }

  auto try_stable = [&](const Polarization& p) -> bool {
    if (!p.subordinate_certificate || !p.maximal_certificate) return false;
    if (!stabilizes_flag(alg, levi, s, p.subspace)) return false;
    out.bound = DegreeBound::ExactlyOne;
    out.reason = BoundReason::FlagStable;
    out.certificate = p;
    return true;
  };

  for (const auto& h : candidate_polarizations) {
    Polarization p;
    p.subspace = h;
    try {
      p.subordinate_certificate = is_subordinate(alg, psi, h);
    } catch (const NotClosed&) {
      continue;  // not even a subalgebra; skip the candidate
    }
    p.maximal_certificate = 2 * h.dim() == 2 * alg.dim() - orbit_dimension(alg, psi);
    if (try_stable(p)) return out;
  }
  for (bool reverse : {false, true}) {
    Polarization p = vergne_polarization(alg, psi, default_ideal_flag(alg, reverse));
    if (try_stable(p)) return out;
  }

  if (out.depth_report.depth == 2) {
    out.bound = DegreeBound::AtMostTwo;
    out.reason = BoundReason::Depth2;
    return out;
  }
  out.bound = DegreeBound::Unknown;
  out.reason = BoundReason::None;
  return out;
}

bool assumption_reductive_check(int u_dim, const std::vector<Vec>& torus_weights) {
  if (u_dim == 0) return true;
  if (static_cast<int>(torus_weights.size()) != u_dim) {
    throw std::invalid_argument("need one weight vector per Lie U basis direction");
  }
  for (const auto& w : torus_weights) {
    if (is_zero(w)) return false;
  }
  return true;
}

}  // namespace coorbit
