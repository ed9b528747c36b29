#include "coorbit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace coorbit {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_size_suffix(const std::string& spec, const std::string& prefix, int min_value) {
  const std::string tail = spec.substr(prefix.size());
  size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(tail, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("algebra spec '" + spec + "': size after '" + prefix +
                                "' is not a number");
  }
  if (used != tail.size())
    throw std::invalid_argument("algebra spec '" + spec + "': trailing characters after the size");
  if (n < min_value)
    throw std::invalid_argument("algebra spec '" + spec + "': size must be >= " +
                                std::to_string(min_value));
  return n;
}

Rat coefficient_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rat(value.get<long long>());
  throw std::invalid_argument(where + ": coefficients must be rational strings or integers");
}

NilpotentLieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("algebra JSON: missing integer field 'dim'");
  const int dim = j["dim"].get<int>();
  if (dim <= 0) throw std::invalid_argument("algebra JSON: 'dim' must be positive");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw std::invalid_argument("algebra JSON: 'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw std::invalid_argument("algebra JSON: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  BracketTable table;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array())
      throw std::invalid_argument("algebra JSON: 'brackets' must be an array");
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("out"))
        throw std::invalid_argument("algebra JSON: each bracket needs fields 'i', 'j', 'out'");
      const int i = entry["i"].get<int>();
      const int jj = entry["j"].get<int>();
      if (i < 0 || jj < 0 || i >= dim || jj >= dim)
        throw std::invalid_argument("algebra JSON: bracket indices out of range (0-based)");
      if (i >= jj)
        throw std::invalid_argument("algebra JSON: bracket entries need i < j");
      SparseVec out;
      for (const auto& term : entry["out"]) {
        if (!term.is_object() || !term.contains("k") || !term.contains("c"))
          throw std::invalid_argument("algebra JSON: each output term needs 'k' and 'c'");
        const int k = term["k"].get<int>();
        if (k < 0 || k >= dim)
          throw std::invalid_argument("algebra JSON: output index out of range (0-based)");
        out.push_back({k, coefficient_from_json(term["c"], "algebra JSON bracket output")});
      }
      table[{i, jj}] = std::move(out);
    }
  }
  if (labels.empty()) return make_algebra(dim, std::move(table));
  return make_algebra(dim, std::move(labels), std::move(table));
}

/// Splits "name(arg1,arg2,...)" into its arguments; empty return = no match.
std::optional<std::vector<std::string>> shorthand_args(const std::string& spec,
                                                       const std::string& name) {
  if (spec.size() < name.size() + 2 || spec.compare(0, name.size(), name) != 0) return std::nullopt;
  if (spec[name.size()] != '(' || spec.back() != ')') return std::nullopt;
  const std::string inner = spec.substr(name.size() + 1, spec.size() - name.size() - 2);
  std::vector<std::string> args;
  size_t start = 0;
  while (true) {
    const size_t comma = inner.find(',', start);
    if (comma == std::string::npos) {
      args.push_back(strip(inner.substr(start)));
      break;
    }
    args.push_back(strip(inner.substr(start, comma - start)));
    start = comma + 1;
  }
  return args;
}

bool is_unit_row(const Vec& row, int pivot) {
  for (int i = 0; i < static_cast<int>(row.size()); ++i) {
    const Rat expected = (i == pivot) ? Rat(1) : Rat(0);
    if (row[static_cast<size_t>(i)] != expected) return false;
  }
  return true;
}

}  // namespace

AlgebraHandle parse_algebra_spec(const std::string& raw) {
  const std::string spec = strip(raw);
  AlgebraHandle h;
  h.spec = spec;
  if (spec.rfind("gl_upper:", 0) == 0) {
    const int n = parse_size_suffix(spec, "gl_upper:", 2);
    CatalogEntry entry = catalog_gl_upper(n);
    h.algebra = std::move(entry.algebra);
    h.levi = std::move(entry.levi);
    h.roots = root_datum_gl_upper(n);
    return h;
  }
  if (spec.rfind("sp:", 0) == 0) {
    const int n = parse_size_suffix(spec, "sp:", 2);
    CatalogEntry entry = catalog_sp_unipotent(n);
    h.algebra = std::move(entry.algebra);
    h.levi = std::move(entry.levi);
    h.roots = root_datum_sp(n);
    return h;
  }
  if (spec.rfind("heis:", 0) == 0) {
    const int m = parse_size_suffix(spec, "heis:", 1);
    h.algebra = catalog_heisenberg(m);
    return h;
  }
  if (!spec.empty() && spec.front() == '{') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("algebra JSON parse error: ") + e.what());
    }
    h.algebra = algebra_from_json(j);
    return h;
  }
  throw std::invalid_argument("unknown algebra spec '" + spec +
                              "' (expected gl_upper:n, sp:n, heis:m, or a JSON object)");
}

Functional parse_functional_spec(const AlgebraHandle& handle, const std::string& raw) {
  const std::string spec = strip(raw);
  const NilpotentLieAlgebra& alg = handle.algebra;

  if (auto args = shorthand_args(spec, "psi_ab")) {
    if (args->size() != 2)
      throw std::invalid_argument("psi_ab shorthand needs exactly two arguments");
    if (handle.spec != "gl_upper:4")
      throw std::invalid_argument("psi_ab(a,b) is defined on gl_upper:4 only");
    std::map<std::string, Rat> coeffs;
    coeffs["e_1,4"] = parse_rational((*args)[0]);
    coeffs["e_2,3"] = parse_rational((*args)[1]);
    return make_functional(alg, coeffs);
  }
  if (auto args = shorthand_args(spec, "f")) {
    if (args->size() != 1) throw std::invalid_argument("f shorthand needs exactly one argument");
    std::string label;
    if (handle.spec.rfind("gl_upper:", 0) == 0) {
      label = "e_1," + handle.spec.substr(std::string("gl_upper:").size());
    } else if (handle.spec.rfind("sp:", 0) == 0) {
      const int n = parse_size_suffix(handle.spec, "sp:", 2);
      label = "e_1," + std::to_string(2 * n);
    } else {
      throw std::invalid_argument("f(a) is defined on gl_upper:n and sp:n only");
    }
    std::map<std::string, Rat> coeffs;
    coeffs[label] = parse_rational((*args)[0]);
    return make_functional(alg, coeffs);
  }

  if (spec.empty() || spec.front() != '{')
    throw std::invalid_argument("functional spec must be a JSON object or a shorthand");
  Json j;
  try {
    j = Json::parse(spec);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("functional JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("functional JSON must be an object");

  const Json* coeff_obj = &j;
  if (j.contains("coeffs")) {
    if (j.contains("algebra") && j["algebra"].is_string() &&
        j["algebra"].get<std::string>() != handle.spec)
      throw std::invalid_argument("functional declares algebra '" +
                                  j["algebra"].get<std::string>() + "' but was applied to '" +
                                  handle.spec + "'");
    coeff_obj = &j["coeffs"];
    if (!coeff_obj->is_object())
      throw std::invalid_argument("functional JSON: 'coeffs' must be an object");
  }
  std::map<std::string, Rat> coeffs;
  for (const auto& [key, value] : coeff_obj->items())
    coeffs[key] = coefficient_from_json(value, "functional coefficient '" + key + "'");
  return make_functional(alg, coeffs);
}

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& c : v) out.push_back(rat_to_string(c));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows; ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

Json functional_json(const Functional& psi) {
  Json out = Json::object();
  const auto& labels = psi.algebra->labels();
  for (int i = 0; i < static_cast<int>(psi.coeffs.size()); ++i) {
    if (psi.coeffs[static_cast<size_t>(i)] == 0) continue;
    out[labels[static_cast<size_t>(i)]] = rat_to_string(psi.coeffs[static_cast<size_t>(i)]);
  }
  return out;
}

Json subspace_json(const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  out["ambient"] = s.ambient_dim();
  bool coordinate_span = true;
  for (int k = 0; k < s.dim(); ++k) {
    if (!is_unit_row(s.basis()[static_cast<size_t>(k)], s.pivots()[static_cast<size_t>(k)])) {
      coordinate_span = false;
      break;
    }
  }
  if (coordinate_span) {
    out["coords"] = s.pivots();
  } else {
    Json basis = Json::array();
    for (const Vec& row : s.basis()) basis.push_back(vec_json(row));
    out["basis"] = basis;
  }
  return out;
}

Json flag_json(const std::vector<Subspace>& flag) {
  Json out = Json::array();
  for (const Subspace& member : flag) out.push_back(subspace_json(member));
  return out;
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::TrivialFunctionalOrbit: return "TrivialFunctionalOrbit";
    case Classification::Character: return "Character";
    case Classification::WeilPullback: return "WeilPullback";
    case Classification::HighDepth: return "HighDepth";
  }
  return "?";
}

std::string bound_name(DegreeBound b) {
  switch (b) {
    case DegreeBound::ExactlyOne: return "ExactlyOne";
    case DegreeBound::AtMostTwo: return "AtMostTwo";
    case DegreeBound::Unknown: return "Unknown";
  }
  return "?";
}

std::string reason_name(BoundReason r) {
  switch (r) {
    case BoundReason::Character: return "Character";
    case BoundReason::FlagStable: return "FlagStable";
    case BoundReason::Depth2: return "Depth2";
    case BoundReason::None: return "None";
  }
  return "?";
}

Json depth_report_json(const DepthReport& r) {
  Json out;
  out["depth"] = r.depth;
  out["vanishing_layer"] = r.vanishing_layer;
  out["classification"] = classification_name(r.classification);
  return out;
}

Json heisenberg_quotient_json(const HeisenbergQuotient& q) {
  Json out;
  out["stages"] = static_cast<int>(q.quotient_chain.size());
  out["final_dim"] = q.final_algebra.dim();
  out["final_labels"] = q.final_algebra.labels();
  Json coeffs = Json::object();
  for (int i = 0; i < q.final_algebra.dim(); ++i) {
    if (q.final_coeffs[static_cast<size_t>(i)] == 0) continue;
    coeffs[q.final_algebra.labels()[static_cast<size_t>(i)]] =
        rat_to_string(q.final_coeffs[static_cast<size_t>(i)]);
  }
  out["final_coeffs"] = coeffs;
  out["symplectic_space_dim"] = q.symplectic_space_dim;
  out["pairing_nondegenerate"] = q.pairing_nondegenerate;
  out["central_coefficient"] = rat_to_string(q.central_coefficient);
  return out;
}

Json polarization_json(const Polarization& p) {
  Json out;
  out["dim"] = p.subspace.dim();
  out["subspace"] = subspace_json(p.subspace);
  out["subordinate"] = p.subordinate_certificate;
  out["maximal"] = p.maximal_certificate;
  if (p.flag_used) out["flag"] = flag_json(*p.flag_used);
  return out;
}

Json metaplectic_json(const MetaplecticBound& b) {
  Json out;
  out["bound"] = bound_name(b.bound);
  out["reason"] = reason_name(b.reason);
  out["depth"] = depth_report_json(b.depth_report);
  if (b.certificate) out["certificate"] = polarization_json(*b.certificate);
  return out;
}

Json degeneration_certificate_json(const DegenerationCertificate& c) {
  Json out;
  out["psi"] = functional_json(c.psi);
  out["psi0"] = functional_json(c.psi0);
  out["lambda"] = c.lambda_weights;
  Json checks;
  checks["distinct_orbits"] = c.checks.distinct_orbits;
  checks["equal_orbit_dims"] = c.checks.equal_orbit_dims;
  checks["limit_matches"] = c.checks.limit_matches;
  checks["lambda_commutes_with_stabilizer"] = c.checks.lambda_commutes_with_stabilizer;
  out["checks"] = checks;
  out["horizontal"] = c.horizontal();
  if (c.simple_checks) {
    Json sc;
    sc["p_orbit_dim_drop_one"] = c.simple_checks->p_orbit_dim_drop_one;
    sc["delta_is_simple_negative_root_multiple_orthogonal_to_J"] =
        c.simple_checks->delta_is_simple_negative_root_multiple_orthogonal_to_J;
    if (c.simple_checks->delta_root_label) sc["delta_root_label"] = *c.simple_checks->delta_root_label;
    out["simple_checks"] = sc;
    out["simple"] = c.simple();
  }
  return out;
}

}  // namespace coorbit
