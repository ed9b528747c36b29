#include "coorbit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coorbit/json_io.hpp"

namespace coorbit {

namespace {

struct InvocationState {
  bool pretty = false;
  std::string file_path;

  std::string algebra_spec;
  std::string psi_spec;
  std::vector<std::string> assignments;
  int n = 0;
  std::string golden_set;
};

void print_json(const Json& j, bool pretty, std::ostream& out) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

Json make_report(const std::string& case_name, const Json& inputs, const Json& results,
                 const std::optional<Json>& expected) {
  Json report;
  report["case_name"] = case_name;
  report["inputs"] = inputs;
  report["results"] = results;
  bool match = true;
  if (expected) {
    report["expected"] = *expected;
    for (const auto& [key, value] : expected->items())
      if (!results.contains(key) || results[key] != value) match = false;
  }
  report["match"] = match;
  return report;
}

Json load_file_inputs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("input file '" + path + "': " + std::string(e.what()));
  }
  if (!j.is_object())
    throw std::invalid_argument("input file '" + path + "' must hold a JSON object");
  return j;
}

std::string spec_from_json(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::vector<long long> parse_lambda_string(const std::string& s) {
  std::vector<long long> lambda;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda entry '" + piece + "' is not an integer");
    }
    if (used != piece.size())
      throw std::invalid_argument("lambda entry '" + piece + "' is not an integer");
    lambda.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return lambda;
}

std::vector<long long> lambda_from_json(const Json& j) {
  if (j.is_string()) return parse_lambda_string(j.get<std::string>());
  if (j.is_array()) {
    std::vector<long long> lambda;
    for (const auto& v : j) {
      if (!v.is_number_integer())
        throw std::invalid_argument("lambda entries must be integers");
      lambda.push_back(v.get<long long>());
    }
    return lambda;
  }
  throw std::invalid_argument("lambda must be an integer array or a comma-separated string");
}

/// Resolves the (algebra, psi) inputs of the two-argument subcommands.
std::pair<std::string, std::string> resolve_two(const InvocationState& st) {
  if (!st.file_path.empty()) {
    if (!st.algebra_spec.empty() || !st.psi_spec.empty())
      throw std::invalid_argument("--file replaces the positional inputs; give one or the other");
    const Json j = load_file_inputs(st.file_path);
    if (!j.contains("algebra") || !j.contains("psi"))
      throw std::invalid_argument("input file needs fields 'algebra' and 'psi'");
    return {spec_from_json(j["algebra"]), spec_from_json(j["psi"])};
  }
  if (st.algebra_spec.empty() || st.psi_spec.empty())
    throw std::invalid_argument("expected ALGEBRA and PSI arguments (or --file)");
  return {st.algebra_spec, st.psi_spec};
}

// ---- corner polarization patterns of the catalog families ----

// All coordinates of gl_upper(n) except the first-row entries e_{1,j}, j < n.
std::vector<int> gl_corner_pattern(int n) {
  std::vector<int> coords;
  const auto pairs = gl_pairs(n);
  for (int idx = 0; idx < static_cast<int>(pairs.size()); ++idx)
    if (!(pairs[static_cast<size_t>(idx)].first == 1 &&
          pairs[static_cast<size_t>(idx)].second <= n - 1))
      coords.push_back(idx);
  return coords;
}

// All coordinates of the sp catalog except the short first-row entries
// e_{1,j}, 2 <= j <= n.
std::vector<int> sp_corner_pattern(int n) {
  std::vector<int> coords;
  const auto positions = sp_fundamental_positions(n);
  for (int idx = 0; idx < static_cast<int>(positions.size()); ++idx)
    if (!(positions[static_cast<size_t>(idx)].first == 1 &&
          positions[static_cast<size_t>(idx)].second <= n))
      coords.push_back(idx);
  return coords;
}

// ---- subcommand handlers ----

int handle_orbit(const InvocationState& st, std::ostream& out) {
  const auto [aspec, pspec] = resolve_two(st);
  const AlgebraHandle h = parse_algebra_spec(aspec);
  const Functional psi = parse_functional_spec(h, pspec);
  const OrbitDescriptor d = orbit_descriptor(h.algebra, psi);
  const DepthReport dr = depth(h.algebra, psi);
  Json results;
  results["orbit_dimension"] = d.dimension;
  results["n_stabilizer_dim"] = d.n_stabilizer.dim();
  results["n_stabilizer"] = subspace_json(d.n_stabilizer);
  results["canonical_form"] = functional_json(d.canonical_form);
  results["depth"] = dr.depth;
  results["classification"] = classification_name(dr.classification);
  const Json inputs{{"algebra", aspec}, {"psi", pspec}};
  print_json(make_report("orbit", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

int handle_classify(const InvocationState& st, std::ostream& out) {
  const auto [aspec, pspec] = resolve_two(st);
  const AlgebraHandle h = parse_algebra_spec(aspec);
  const Functional psi = parse_functional_spec(h, pspec);
  const DepthReport dr = depth(h.algebra, psi);
  Json results;
  results["depth_report"] = depth_report_json(dr);
  results["classification"] = classification_name(dr.classification);
  if (dr.depth == 2) {
    const HeisenbergQuotient hq = heisenberg_quotient(h.algebra, psi);
    results["heisenberg"] = heisenberg_quotient_json(hq);
    results["symplectic_space_dim"] = hq.symplectic_space_dim;
  }
  const WeightedLeviAction levi =
      h.levi ? *h.levi : make_levi_action(h.algebra, 0, {}, {});
  const Subspace s =
      h.levi ? levi_orbit_stabilizer_lie(h.algebra, levi, psi) : Subspace::zero(0);
  results["metaplectic"] = metaplectic_json(metaplectic_degree_bound(h.algebra, levi, s, psi, {}));
  const Json inputs{{"algebra", aspec}, {"psi", pspec}};
  print_json(make_report("classify", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

int handle_polarize(const InvocationState& st, std::ostream& out) {
  const auto [aspec, pspec] = resolve_two(st);
  const AlgebraHandle h = parse_algebra_spec(aspec);
  const Functional psi = parse_functional_spec(h, pspec);
  const Polarization p = vergne_polarization(h.algebra, psi, default_ideal_flag(h.algebra));
  Json results;
  results["dim"] = p.subspace.dim();
  results["polarization"] = polarization_json(p);
  results["is_polarization"] = is_polarization(h.algebra, psi, p.subspace);
  const Json inputs{{"algebra", aspec}, {"psi", pspec}};
  print_json(make_report("polarize", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

int handle_stabilizer(const InvocationState& st, std::ostream& out) {
  const auto [aspec, pspec] = resolve_two(st);
  const AlgebraHandle h = parse_algebra_spec(aspec);
  if (!h.levi)
    throw std::invalid_argument("algebra spec '" + h.spec + "' carries no Levi action");
  const Functional psi = parse_functional_spec(h, pspec);
  const Subspace s = levi_orbit_stabilizer_lie(h.algebra, *h.levi, psi);
  Json results;
  results["levi_stabilizer_dim"] = s.dim();
  results["levi_stabilizer"] = subspace_json(s);
  results["orbit_dimension"] = orbit_dimension(h.algebra, psi);
  results["p_orbit_dimension"] = p_orbit_dimension(h.algebra, *h.levi, psi);
  const Json inputs{{"algebra", aspec}, {"psi", pspec}};
  print_json(make_report("stabilizer", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

int handle_degenerate(const InvocationState& st, std::ostream& out) {
  std::string aspec, pspec, p0spec;
  std::vector<long long> lambda;
  bool have_lambda = false;
  if (!st.file_path.empty()) {
    if (!st.algebra_spec.empty() || !st.assignments.empty())
      throw std::invalid_argument("--file replaces the positional inputs; give one or the other");
    const Json j = load_file_inputs(st.file_path);
    if (!j.contains("algebra") || !j.contains("psi") || !j.contains("psi0") ||
        !j.contains("lambda"))
      throw std::invalid_argument("input file needs fields 'algebra', 'psi', 'psi0', 'lambda'");
    aspec = spec_from_json(j["algebra"]);
    pspec = spec_from_json(j["psi"]);
    p0spec = spec_from_json(j["psi0"]);
    lambda = lambda_from_json(j["lambda"]);
    have_lambda = true;
  } else {
    if (st.algebra_spec.empty())
      throw std::invalid_argument("expected ALGEBRA followed by key=value assignments");
    aspec = st.algebra_spec;
    for (const std::string& kv : st.assignments) {
      const size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("expected key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "psi") {
        pspec = value;
      } else if (key == "psi0") {
        p0spec = value;
      } else if (key == "lambda") {
        lambda = parse_lambda_string(value);
        have_lambda = true;
      } else {
        throw std::invalid_argument("unknown key '" + key + "' (expected psi, psi0, lambda)");
      }
    }
  }
  if (pspec.empty() || p0spec.empty() || !have_lambda)
    throw std::invalid_argument("degenerate needs psi=..., psi0=..., and lambda=...");

  const AlgebraHandle h = parse_algebra_spec(aspec);
  if (!h.levi)
    throw std::invalid_argument("algebra spec '" + h.spec + "' carries no Levi action");
  const Functional psi = parse_functional_spec(h, pspec);
  const Functional psi0 = parse_functional_spec(h, p0spec);
  DegenerationCertificate cert = check_horizontal(h.algebra, *h.levi, psi, psi0, lambda);
  if (cert.horizontal() && h.roots)
    cert = check_simple(h.algebra, *h.levi, *h.roots, psi, psi0, lambda);
  Json results;
  results["certificate"] = degeneration_certificate_json(cert);
  results["horizontal"] = cert.horizontal();
  results["simple"] = cert.simple();
  results["stabilizer_monotonicity"] =
      stabilizer_monotonicity_check(h.algebra, *h.levi, psi, psi0);
  const Json inputs{{"algebra", aspec}, {"psi", pspec}, {"psi0", p0spec}, {"lambda", lambda}};
  print_json(make_report("degenerate", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

int handle_cosets(const InvocationState& st, std::ostream& out) {
  int n = st.n;
  if (!st.file_path.empty()) {
    if (n != 0)
      throw std::invalid_argument("--file replaces the positional inputs; give one or the other");
    const Json j = load_file_inputs(st.file_path);
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw std::invalid_argument("input file needs an integer field 'n'");
    n = j["n"].get<int>();
  }
  if (n == 0) throw std::invalid_argument("expected the matrix size N (or --file)");
  const auto outer = double_coset_reps(n);
  Json results;
  results["n"] = n;
  results["outer_count"] = static_cast<int>(outer.size());
  Json outer_json = Json::array();
  for (const Matrix& m : outer) outer_json.push_back(matrix_json(m));
  results["outer"] = outer_json;
  if (n >= 5) {
    const auto inner = inner_coset_reps(n);
    results["inner_count"] = static_cast<int>(inner.size());
    Json inner_json = Json::array();
    for (const Matrix& m : inner) inner_json.push_back(matrix_json(m));
    results["inner"] = inner_json;
  }
  const Json inputs{{"n", n}};
  print_json(make_report("cosets", inputs, results, std::nullopt), st.pretty, out);
  return 0;
}

// ---- golden batteries ----

Json golden_gl4_case(const std::string& a, const std::string& b) {
  const AlgebraHandle h = parse_algebra_spec("gl_upper:4");
  const std::string psi_spec = "psi_ab(" + a + "," + b + ")";
  const Functional psi = parse_functional_spec(h, psi_spec);
  const Subspace corner = subalgebra_from_pattern(h.algebra, gl_corner_pattern(4));
  const Subspace s = levi_orbit_stabilizer_lie(h.algebra, *h.levi, psi);
  const MetaplecticBound mb = metaplectic_degree_bound(h.algebra, *h.levi, s, psi, {corner});
  const DepthReport dr = depth(h.algebra, psi);

  Json results;
  results["orbit_dimension"] = orbit_dimension(h.algebra, psi);
  results["depth"] = dr.depth;
  results["classification"] = classification_name(dr.classification);
  results["levi_stabilizer_dim"] = s.dim();
  results["corner_h_is_polarization"] = is_polarization(h.algebra, psi, corner);
  results["metaplectic_bound"] = bound_name(mb.bound);
  results["metaplectic_reason"] = reason_name(mb.reason);

  Json expected;
  expected["orbit_dimension"] = 4;
  expected["depth"] = 3;
  expected["classification"] = "HighDepth";
  expected["levi_stabilizer_dim"] = (b == "0") ? 3 : 2;
  expected["corner_h_is_polarization"] = true;
  expected["metaplectic_bound"] = "ExactlyOne";
  expected["metaplectic_reason"] = "FlagStable";

  const Json inputs{{"algebra", "gl_upper:4"}, {"psi", psi_spec}};
  return make_report("gl4/" + psi_spec, inputs, results, expected);
}

Json golden_gln_case(int n) {
  const AlgebraHandle h = parse_algebra_spec("gl_upper:" + std::to_string(n));
  const Functional psi = parse_functional_spec(h, "f(1)");
  const Subspace corner = subalgebra_from_pattern(h.algebra, gl_corner_pattern(n));
  Json results;
  results["depth"] = depth(h.algebra, psi).depth;
  results["orbit_dimension"] = orbit_dimension(h.algebra, psi);
  results["levi_stabilizer_dim"] = levi_orbit_stabilizer_lie(h.algebra, *h.levi, psi).dim();
  results["corner_h_is_polarization"] = is_polarization(h.algebra, psi, corner);
  Json expected;
  expected["depth"] = n - 1;
  expected["orbit_dimension"] = 2 * n - 4;
  expected["levi_stabilizer_dim"] = n - 1;
  expected["corner_h_is_polarization"] = true;
  const Json inputs{{"algebra", "gl_upper:" + std::to_string(n)}, {"psi", "f(1)"}};
  return make_report("gln/n=" + std::to_string(n), inputs, results, expected);
}

Json golden_sp_case(int n) {
  const AlgebraHandle h = parse_algebra_spec("sp:" + std::to_string(n));
  const Functional psi = parse_functional_spec(h, "f(1)");
  const Subspace corner = subalgebra_from_pattern(h.algebra, sp_corner_pattern(n));
  Json results;
  results["algebra_dim"] = h.algebra.dim();
  results["center_dim"] = h.algebra.center().dim();
  results["depth"] = depth(h.algebra, psi).depth;
  results["orbit_dimension"] = orbit_dimension(h.algebra, psi);
  results["levi_stabilizer_dim"] = levi_orbit_stabilizer_lie(h.algebra, *h.levi, psi).dim();
  results["corner_h_is_polarization"] = is_polarization(h.algebra, psi, corner);
  Json expected;
  expected["algebra_dim"] = n * n;
  expected["center_dim"] = 1;
  expected["depth"] = 2 * n - 1;
  expected["orbit_dimension"] = 2 * n - 2;
  expected["levi_stabilizer_dim"] = n - 1;
  expected["corner_h_is_polarization"] = true;
  const Json inputs{{"algebra", "sp:" + std::to_string(n)}, {"psi", "f(1)"}};
  return make_report("sp/n=" + std::to_string(n), inputs, results, expected);
}

Json golden_heisenberg_case(int m) {
  const AlgebraHandle h = parse_algebra_spec("heis:" + std::to_string(m));
  const Functional central = parse_functional_spec(h, "{\"z\":\"1\"}");
  const Functional boundary = parse_functional_spec(h, "{\"p_1\":\"1\"}");
  const HeisenbergQuotient hq = heisenberg_quotient(h.algebra, central);
  const Polarization p = vergne_polarization(h.algebra, central, default_ideal_flag(h.algebra));
  Vec z = zero_vec(h.algebra.dim());
  z[static_cast<size_t>(2 * m)] = 1;

  Json results;
  results["central_classification"] = classification_name(depth(h.algebra, central).classification);
  results["symplectic_space_dim"] = hq.symplectic_space_dim;
  results["central_coefficient"] = rat_to_string(hq.central_coefficient);
  results["boundary_classification"] =
      classification_name(depth(h.algebra, boundary).classification);
  results["vergne_dim"] = p.subspace.dim();
  results["vergne_contains_center"] = p.subspace.contains(z);
  results["vergne_is_polarization"] = is_polarization(h.algebra, central, p.subspace);
  Json expected;
  expected["central_classification"] = "WeilPullback";
  expected["symplectic_space_dim"] = 2 * m;
  expected["central_coefficient"] = "1";
  expected["boundary_classification"] = "Character";
  expected["vergne_dim"] = m + 1;
  expected["vergne_contains_center"] = true;
  expected["vergne_is_polarization"] = true;
  const Json inputs{{"algebra", "heis:" + std::to_string(m)},
                    {"psi", "{\"z\":\"1\"}"},
                    {"boundary_psi", "{\"p_1\":\"1\"}"}};
  return make_report("heisenberg/m=" + std::to_string(m), inputs, results, expected);
}

Json golden_degeneration_case() {
  const AlgebraHandle h = parse_algebra_spec("gl_upper:4");
  const Functional psi = parse_functional_spec(h, "psi_ab(1,1)");
  const Functional psi0 = parse_functional_spec(h, "psi_ab(1,0)");
  const std::vector<long long> lambda{0, 0, 1, 0};
  DegenerationCertificate cert = check_horizontal(h.algebra, *h.levi, psi, psi0, lambda);
  if (cert.horizontal()) cert = check_simple(h.algebra, *h.levi, *h.roots, psi, psi0, lambda);

  Json results;
  results["horizontal"] = cert.horizontal();
  results["simple"] = cert.simple();
  results["stabilizer_monotonicity"] =
      stabilizer_monotonicity_check(h.algebra, *h.levi, psi, psi0);
  results["p_orbit_dim_psi"] = p_orbit_dimension(h.algebra, *h.levi, psi);
  results["p_orbit_dim_psi0"] = p_orbit_dimension(h.algebra, *h.levi, psi0);
  if (cert.simple_checks && cert.simple_checks->delta_root_label)
    results["delta_root_label"] = *cert.simple_checks->delta_root_label;
  results["certificate"] = degeneration_certificate_json(cert);
  Json expected;
  expected["horizontal"] = true;
  expected["simple"] = true;
  expected["stabilizer_monotonicity"] = true;
  expected["p_orbit_dim_psi"] = 6;
  expected["p_orbit_dim_psi0"] = 5;
  expected["delta_root_label"] = "e_2,3";
  const Json inputs{{"algebra", "gl_upper:4"},
                    {"psi", "psi_ab(1,1)"},
                    {"psi0", "psi_ab(1,0)"},
                    {"lambda", lambda}};
  return make_report("degeneration/gl4-corner", inputs, results, expected);
}

Json golden_cosets_case(int n) {
  Json results;
  results["outer_count"] = static_cast<int>(double_coset_reps(n).size());
  results["inner_count"] = static_cast<int>(inner_coset_reps(n).size());
  Json expected;
  expected["outer_count"] = n - 2;
  expected["inner_count"] = n - 3;
  const Json inputs{{"n", n}};
  return make_report("cosets/n=" + std::to_string(n), inputs, results, expected);
}

std::vector<Json> golden_reports(const std::string& set) {
  std::vector<Json> reports;
  if (set == "gl4") {
    reports.push_back(golden_gl4_case("1", "1"));
    reports.push_back(golden_gl4_case("2", "3"));
    reports.push_back(golden_gl4_case("1", "0"));
    reports.push_back(golden_gl4_case("-1", "0"));
  } else if (set == "gln") {
    for (int n = 4; n <= 7; ++n) reports.push_back(golden_gln_case(n));
  } else if (set == "sp") {
    for (int n = 3; n <= 4; ++n) reports.push_back(golden_sp_case(n));
  } else if (set == "heisenberg") {
    for (int m = 1; m <= 3; ++m) reports.push_back(golden_heisenberg_case(m));
  } else if (set == "degeneration") {
    reports.push_back(golden_degeneration_case());
  } else if (set == "cosets") {
    for (int n = 5; n <= 8; ++n) reports.push_back(golden_cosets_case(n));
  } else {
    throw std::invalid_argument("unknown golden set '" + set +
                                "' (expected gl4, gln, sp, heisenberg, degeneration, cosets)");
  }
  return reports;
}

int handle_golden(const InvocationState& st, std::ostream& out) {
  const std::vector<Json> reports = golden_reports(st.golden_set);
  Json arr = Json::array();
  bool all_match = true;
  for (const Json& r : reports) {
    all_match = all_match && r.at("match").get<bool>();
    arr.push_back(r);
  }
  print_json(arr, st.pretty, out);
  return all_match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  InvocationState st;
  int exit_code = 0;

  CLI::App app{"exact coadjoint-orbit calculator for nilpotent Lie algebras"};
  app.require_subcommand(1);

  const auto add_common = [&st](CLI::App* sub) {
    sub->add_flag("--pretty", st.pretty, "indent the JSON output");
    sub->add_flag("--json", "emit JSON (the default; accepted for symmetry)");
    sub->add_option("--file", st.file_path, "read the inputs from a JSON file");
  };

  auto* orbit_cmd =
      app.add_subcommand("orbit", "orbit dimension, stabilizer, canonical form, depth");
  orbit_cmd->add_option("algebra", st.algebra_spec, "gl_upper:n, sp:n, heis:m, or a JSON object");
  orbit_cmd->add_option("psi", st.psi_spec, "functional coefficients (JSON) or shorthand");
  add_common(orbit_cmd);
  orbit_cmd->callback([&] { exit_code = handle_orbit(st, out); });

  auto* classify_cmd =
      app.add_subcommand("classify", "depth trichotomy, Heisenberg reduction, degree bound");
  classify_cmd->add_option("algebra", st.algebra_spec, "gl_upper:n, sp:n, heis:m, or a JSON object");
  classify_cmd->add_option("psi", st.psi_spec, "functional coefficients (JSON) or shorthand");
  add_common(classify_cmd);
  classify_cmd->callback([&] { exit_code = handle_classify(st, out); });

  auto* polarize_cmd = app.add_subcommand("polarize", "radical-sum polarization of the default flag");
  polarize_cmd->add_option("algebra", st.algebra_spec, "gl_upper:n, sp:n, heis:m, or a JSON object");
  polarize_cmd->add_option("psi", st.psi_spec, "functional coefficients (JSON) or shorthand");
  add_common(polarize_cmd);
  polarize_cmd->callback([&] { exit_code = handle_polarize(st, out); });

  auto* stabilizer_cmd =
      app.add_subcommand("stabilizer", "Levi orbit stabilizer and combined orbit dimension");
  stabilizer_cmd->add_option("algebra", st.algebra_spec, "gl_upper:n or sp:n");
  stabilizer_cmd->add_option("psi", st.psi_spec, "functional coefficients (JSON) or shorthand");
  add_common(stabilizer_cmd);
  stabilizer_cmd->callback([&] { exit_code = handle_stabilizer(st, out); });

  auto* degenerate_cmd =
      app.add_subcommand("degenerate", "horizontal/simple degeneration certificate");
  degenerate_cmd->add_option("algebra", st.algebra_spec, "gl_upper:n or sp:n");
  degenerate_cmd->add_option("assignments", st.assignments,
                             "psi={...} psi0={...} lambda=w1,w2,...");
  add_common(degenerate_cmd);
  degenerate_cmd->callback([&] { exit_code = handle_degenerate(st, out); });

  auto* cosets_cmd = app.add_subcommand("cosets", "double-coset representative matrices");
  cosets_cmd->add_option("n", st.n, "matrix size (n >= 4)");
  add_common(cosets_cmd);
  cosets_cmd->callback([&] { exit_code = handle_cosets(st, out); });

  auto* golden_cmd = app.add_subcommand("golden", "embedded verification batteries");
  golden_cmd->add_option("set", st.golden_set, "gl4 | gln | sp | heisenberg | degeneration | cosets")
      ->required();
  add_common(golden_cmd);
  golden_cmd->callback([&] { exit_code = handle_golden(st, out); });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("coorbit");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace coorbit
