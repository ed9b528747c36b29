#pragma once

#include <optional>
#include <string>

#include "coorbit/catalog.hpp"
#include "coorbit/orbit.hpp"

namespace coorbit {

enum class RootGroup { GL, Sp };

struct RootEntry {
  std::string label;        // matches the catalog basis label of its coordinate
  std::vector<int> weight;  // torus weight vector of the positive root
  int coord = 0;            // coordinate index in the catalog algebra
};

struct RootDatum {
  RootGroup group = RootGroup::GL;
  int rank = 0;
  std::vector<RootEntry> roots;     // positive roots, bijective with coordinates
  std::vector<int> simple_roots;    // indices into roots
  std::vector<int> parabolic_J;     // indices into simple_roots; empty = Borel
};

RootDatum root_datum_gl_upper(int n);
RootDatum root_datum_sp(int n);

struct DegenerationChecks {
  bool distinct_orbits = false;
  bool equal_orbit_dims = false;
  bool limit_matches = false;
  bool lambda_commutes_with_stabilizer = false;
  bool all() const {
    return distinct_orbits && equal_orbit_dims && limit_matches && lambda_commutes_with_stabilizer;
  }
};

struct SimpleChecks {
  bool p_orbit_dim_drop_one = false;
  bool delta_is_simple_negative_root_multiple_orthogonal_to_J = false;
  std::optional<std::string> delta_root_label;  // set when the support is a single root coordinate
  bool all() const { return p_orbit_dim_drop_one && delta_is_simple_negative_root_multiple_orthogonal_to_J; }
};

struct DegenerationCertificate {
  Functional psi;
  Functional psi0;
  std::vector<long long> lambda_weights;
  DegenerationChecks checks;
  std::optional<SimpleChecks> simple_checks;
  bool horizontal() const { return checks.all(); }
  bool simple() const { return horizontal() && simple_checks && simple_checks->all(); }
};

/// {X in Lie M : X.psi lies in the tangent space of psi's orbit}, where
/// (X.psi)(Y) = -psi([X,Y]) and the tangent space is spanned by the
/// psi o ad(e_k). This is the Lie algebra of the identity component of the
/// Levi stabilizer of the orbit.
Subspace levi_orbit_stabilizer_lie(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                   const Functional& psi);

/// Rank of the combined map (Lie M + Lie N) -> dual, X |-> X.psi.
int p_orbit_dimension(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                      const Functional& psi);

/// Limit of psi under the cocharacter lambda as the parameter goes to zero:
/// the coordinate dual to a weight-alpha coordinate carries the integer
/// lambda-weight -<lambda, alpha>; the limit exists iff that weight is >= 0
/// on psi's support, and keeps exactly the weight-zero coordinates. Requires
/// a diagonal torus Levi with integer weights.
std::optional<Functional> cocharacter_limit(const NilpotentLieAlgebra& alg,
                                            const WeightedLeviAction& levi,
                                            const std::vector<long long>& lambda,
                                            const Functional& psi);

/// Fills the four horizontal-degeneration checks: distinct orbits, equal
/// orbit dimensions, limit matches psi0, and lambda commuting with the Levi
/// stabilizer of psi. Throws TrivialFunctional when psi or psi0 is zero.
DegenerationCertificate check_horizontal(const NilpotentLieAlgebra& alg,
                                         const WeightedLeviAction& levi, const Functional& psi,
                                         const Functional& psi0,
                                         const std::vector<long long>& lambda);

/// Horizontal checks plus the simple ones: the P-orbit dimension drops by
/// exactly one, and delta = psi - psi0 is supported on a single root
/// coordinate that is a simple root orthogonal to the parabolic set J (under
/// the trace-form identification of the dual coordinate with the opposite
/// root vector). Throws NotHorizontal when the base checks fail.
DegenerationCertificate check_simple(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                     const RootDatum& roots, const Functional& psi,
                                     const Functional& psi0, const std::vector<long long>& lambda);

/// True iff the Levi stabilizer of psi is contained in that of psi0.
bool stabilizer_monotonicity_check(const NilpotentLieAlgebra& alg, const WeightedLeviAction& levi,
                                   const Functional& psi, const Functional& psi0);

/// All integer cocharacters with entries in [-bound, bound] whose horizontal
/// certificate passes for (psi, psi0), in lexicographic order.
std::vector<std::vector<long long>> search_cocharacters(const NilpotentLieAlgebra& alg,
                                                        const WeightedLeviAction& levi,
                                                        const Functional& psi,
                                                        const Functional& psi0, int bound);

/// The n-2 block permutation representatives g_0 = I, g_1, ..., g_{n-3}
/// (n >= 4).
std::vector<Matrix> double_coset_reps(int n);

/// The n-3 inner representatives h_0 = I, ..., h_{n-4} (n >= 5).
std::vector<Matrix> inner_coset_reps(int n);

}  // namespace coorbit
