#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "coorbit/catalog.hpp"
#include "coorbit/classify.hpp"
#include "coorbit/levi.hpp"

namespace coorbit {

using Json = nlohmann::json;

/// A parsed algebra input: the algebra plus, for catalog entries, the
/// standard Levi action and root datum. `spec` echoes the input string.
struct AlgebraHandle {
  std::string spec;
  NilpotentLieAlgebra algebra;
  std::optional<WeightedLeviAction> levi;
  std::optional<RootDatum> roots;
};

/// Accepts "gl_upper:n", "sp:n", "heis:m", or a raw JSON object
/// {"dim": n, "labels": [...], "brackets": [{"i", "j", "out": [{"k", "c"}]}]}
/// with 0-based indices, i < j, and "c" a rational string or integer
/// ("labels" optional). Throws std::invalid_argument with a field diagnostic.
AlgebraHandle parse_algebra_spec(const std::string& spec);

/// Accepts a bare {"label": "p/q", ...} object, an {"algebra", "coeffs"}
/// wrapper, or the shorthands "psi_ab(a,b)" (gl_upper:4 family) and "f(a)"
/// (the principal family on gl_upper:n / sp:n). Coefficients may be rational
/// strings or JSON integers; omitted coordinates are zero.
Functional parse_functional_spec(const AlgebraHandle& handle, const std::string& spec);

Json rat_json(const Rat& r);
Json vec_json(const Vec& v);
Json matrix_json(const Matrix& m);
/// Nonzero coordinates only, keyed by basis label.
Json functional_json(const Functional& psi);
/// {"dim", "ambient", "coords"} for coordinate spans, {"dim", "ambient",
/// "basis"} otherwise.
Json subspace_json(const Subspace& s);
Json flag_json(const std::vector<Subspace>& flag);
Json depth_report_json(const DepthReport& r);
Json heisenberg_quotient_json(const HeisenbergQuotient& q);
Json polarization_json(const Polarization& p);
Json metaplectic_json(const MetaplecticBound& b);
Json degeneration_certificate_json(const DegenerationCertificate& c);

std::string classification_name(Classification c);
std::string bound_name(DegreeBound b);
std::string reason_name(BoundReason r);

}  // namespace coorbit
