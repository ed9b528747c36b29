#pragma once

#include <optional>

#include "coorbit/lie.hpp"

namespace coorbit {

/// The antisymmetric form B(i,j) = psi([e_i, e_j]).
struct SkewForm {
  Matrix matrix;
};

struct OrbitDescriptor {
  Functional representative;
  int dimension = 0;
  Subspace n_stabilizer;
  Functional canonical_form;
};

/// The coadjoint action of exp(y): psi |-> psi o exp(-ad y), exact via the
/// terminating exponential series.
Functional coadjoint_act(const NilpotentLieAlgebra& alg, const Vec& y, const Functional& psi);

SkewForm skew_form(const NilpotentLieAlgebra& alg, const Functional& psi);

/// rank(B_psi); the orbit is even-dimensional.
int orbit_dimension(const NilpotentLieAlgebra& alg, const Functional& psi);

/// Radical of B_psi = the stabilizer of psi inside the algebra itself.
Subspace n_stabilizer(const NilpotentLieAlgebra& alg, const Functional& psi);

/// Orbit membership with witness: when psi1 and psi2 lie on the same coadjoint
/// orbit, returns a list of flow vectors y_1..y_m such that applying
/// coadjoint_act successively (y_1 first) carries psi1 to psi2 exactly;
/// returns nullopt when the orbits differ. Works layer by layer down the
/// annihilator filtration of the lower central series, so each step is one
/// exact linear solve; insolvability at a layer certifies distinct orbits.
std::optional<std::vector<Vec>> same_orbit(const NilpotentLieAlgebra& alg, const Functional& psi1,
                                           const Functional& psi2);

/// Replays a witness list through coadjoint_act.
Functional replay_witness(const NilpotentLieAlgebra& alg, const std::vector<Vec>& witness,
                          const Functional& psi);

/// The distinguished representative of psi's orbit: at each filtration layer
/// the reachable affine slice is reduced against its direction space, zeroing
/// the earliest coordinates in basis-label order. Idempotent and constant on
/// orbits.
Functional canonical_form(const NilpotentLieAlgebra& alg, const Functional& psi);

/// Functional of the contragredient orbit: -psi.
Functional dual_functional(const Functional& psi);

/// Levi conjugation at the log level: psi o exp(ad g_log) with g_log in Levi
/// coordinates. The exponential must terminate: throws std::domain_error when
/// the action of g_log is not nilpotent (e.g. plain torus directions; use
/// torus_conjugate for those).
Functional conjugate_functional(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                const Vec& g_log, const Functional& psi);

/// Group-level action of a rational diagonal-torus point t (all entries
/// nonzero): (t . psi)(x) = psi(t^{-1} x t), which scales the coefficient on a
/// weight-w coordinate by prod_k t_k^{-w_k}. Requires a diagonal Levi action
/// with integer weights.
Functional torus_conjugate(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                           const std::vector<Rat>& t, const Functional& psi);

OrbitDescriptor orbit_descriptor(const NilpotentLieAlgebra& alg, const Functional& psi);

/// Descending dual filtration G_0 = full > G_1 > ... > G_c = 0 with
/// G_j = annihilator of the (c+1-j)-th lower-central-series term; the
/// coadjoint Lie action maps G_j into G_{j+1}.
std::vector<Subspace> dual_layer_filtration(const NilpotentLieAlgebra& alg);

/// Annihilator {phi : phi(s) = 0 for all s in S} inside the dual coordinates.
Subspace annihilator(const Subspace& s);

}  // namespace coorbit
