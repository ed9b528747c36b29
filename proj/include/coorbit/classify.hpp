#pragma once

#include "coorbit/polarization.hpp"

namespace coorbit {

enum class Classification { TrivialFunctionalOrbit, Character, WeilPullback, HighDepth };

struct DepthReport {
  int depth = 0;
  int vanishing_layer = 1;  // 1-based series subscript of the first term psi kills
  Classification classification = Classification::TrivialFunctionalOrbit;
};

/// depth = min{n >= 0 : psi vanishes on the (n+1)-st lower-central-series
/// term}; the trichotomy is depth 1 = Character, 2 = WeilPullback,
/// >= 3 = HighDepth, with the zero functional reported separately as depth 0.
DepthReport depth(const NilpotentLieAlgebra& alg, const Functional& psi);

/// True iff psi != 0 and psi vanishes on [n, n].
bool is_character(const NilpotentLieAlgebra& alg, const Functional& psi);

struct ReducedStage {
  NilpotentLieAlgebra algebra;
  Matrix projection;  // from the PREVIOUS stage's coordinates
  Vec coeffs;         // pushed-forward functional on this stage
};

struct HeisenbergQuotient {
  std::vector<ReducedStage> quotient_chain;  // excludes the starting algebra
  NilpotentLieAlgebra final_algebra;
  Vec final_coeffs;
  int symplectic_space_dim = 0;
  SkewForm pairing;          // commutator pairing on the final abelianization
  bool pairing_nondegenerate = false;
  Rat central_coefficient;   // psi on the canonical central generator
};

/// For depth-2 psi: quotient by the third lower-central term, then repeatedly
/// by (center intersect ker psi) until the center is one-dimensional; the
/// result is a Heisenberg algebra carrying psi nontrivially on its center.
/// Throws WrongDepth otherwise.
HeisenbergQuotient heisenberg_quotient(const NilpotentLieAlgebra& alg, const Functional& psi);

enum class DegreeBound { ExactlyOne, AtMostTwo, Unknown };
enum class BoundReason { Character, FlagStable, Depth2, None };

struct MetaplecticBound {
  DegreeBound bound = DegreeBound::Unknown;
  BoundReason reason = BoundReason::None;
  std::optional<Polarization> certificate;  // present for FlagStable
  DepthReport depth_report;
};

/// Degree bound for the minimal central cover attached to (psi, s):
/// ExactlyOne when psi is a character, or when some candidate polarization --
/// then the Vergne polarization of each default flag -- is stabilized by s
/// (certificate attached); else AtMostTwo when depth = 2; else Unknown.
MetaplecticBound metaplectic_degree_bound(const NilpotentLieAlgebra& alg,
                                          const WeightedLeviAction& levi, const Subspace& s,
                                          const Functional& psi,
                                          const std::vector<Subspace>& candidate_polarizations);

/// Generic-torus-element kernel test for a reductive pair presented by the
/// central-torus weights on Lie U: true iff u_dim = 0 or every weight vector
/// is nonzero.
bool assumption_reductive_check(int u_dim, const std::vector<Vec>& torus_weights);

}  // namespace coorbit
