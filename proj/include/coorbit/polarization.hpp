#pragma once

#include <optional>

#include "coorbit/orbit.hpp"

namespace coorbit {

struct Polarization {
  Subspace subspace;
  std::optional<std::vector<Subspace>> flag_used;
  bool subordinate_certificate = false;
  bool maximal_certificate = false;  // dim = ambient - orbit_dimension/2
};

/// True iff psi([a,b]) = 0 for all basis pairs of h. Throws NotClosed when h
/// is not a subalgebra (the error carries the offending basis-row pair).
bool is_subordinate(const NilpotentLieAlgebra& alg, const Functional& psi, const Subspace& h);

/// Subordinate and of the maximal dimension dim(alg) - orbit_dimension/2 --
/// the operative criterion for a polarization on nilpotent algebras.
bool is_polarization(const NilpotentLieAlgebra& alg, const Functional& psi, const Subspace& h);

/// The radical-sum construction: given a complete flag of ideals
/// 0 = F_0 < F_1 < ... < F_d = alg (dim F_k = k), returns
/// h = sum_k rad(B_psi | F_k), certified subordinate and maximal.
/// Throws NotAFlag / NotIdeals on bad input.
Polarization vergne_polarization(const NilpotentLieAlgebra& alg, const Functional& psi,
                                 const std::vector<Subspace>& flag);

/// Complete ideal flag refining the lower central series, adding basis rows of
/// each series term in pivot (label) order. reverse = false is the canonical
/// default; reverse = true adds rows within each layer in the opposite order.
std::vector<Subspace> default_ideal_flag(const NilpotentLieAlgebra& alg, bool reverse = false);

/// True iff every Levi direction in s maps h into h (stabilization of the
/// two-step flag 0 < h < alg at the Lie level). s is a subspace of the Levi.
bool stabilizes_flag(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                     const Subspace& s, const Subspace& h);

}  // namespace coorbit
