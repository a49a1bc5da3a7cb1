#include "qosc/cli.hpp"

#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/gauss.hpp"
#include "qosc/hamiltonian.hpp"
#include "qosc/polychronakos.hpp"
#include "qosc/reducibility.hpp"
#include "qosc/report.hpp"
#include "qosc/roots.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

namespace qosc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fault raised when a self-consistency check inside a command fails.
class InternalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<double> kSweepRealQ = {0.3, 0.9, 1.0, 2.5};
constexpr std::size_t kSweepRealDim = 50;

struct GlobalOptions {
  std::string format = "table";
  double tolerance = 1e-10;
};

struct ParamOptions {
  std::string root;
  std::optional<double> real;
  std::optional<long long> dim;
};

void add_param_options(CLI::App* cmd, ParamOptions& p) {
  cmd->add_option("--root", p.root, "root of unity q_j = exp(2 pi i j/m), written m:j");
  cmd->add_option("--real", p.real, "real deformation parameter q > 0");
  cmd->add_option("--dim", p.dim, "Fock-space dimension (defaults to m for roots)");
}

std::optional<DeformParam> parse_param(const ParamOptions& p) {
  if (!p.root.empty() && p.real) throw UsageError("--root and --real are mutually exclusive");
  if (!p.root.empty()) {
    static const std::regex pattern(R"(^\s*(\d+)\s*:\s*(\d+)\s*$)");
    std::smatch match;
    if (!std::regex_match(p.root, match, pattern)) throw UsageError("--root expects m:j, got '" + p.root + "'");
    try {
      return DeformParam(RootOfUnity(std::stoi(match[1]), std::stoi(match[2])));
    } catch (const std::out_of_range&) {
      throw UsageError("--root values out of range");
    }
  }
  if (p.real) return DeformParam(RealQ(*p.real));
  return std::nullopt;
}

std::size_t resolve_dim(const DeformParam& param, const ParamOptions& p, std::size_t minimum) {
  std::size_t dim = 0;
  if (p.dim) {
    if (*p.dim < static_cast<long long>(minimum)) throw UsageError("--dim must be at least " + std::to_string(minimum));
    dim = static_cast<std::size_t>(*p.dim);
  } else if (auto natural = natural_dim(param)) {
    dim = *natural;
  } else {
    throw UsageError("--real requires --dim");
  }
  if (dim < minimum) throw UsageError("dimension must be at least " + std::to_string(minimum));
  return dim;
}

Json param_inputs(const DeformParam& param, std::size_t dim) {
  Json in = to_json(param);
  in["dim"] = dim;
  return in;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check residual_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual <= tolerance, residual};
}

void emit(const Json& envelope, const GlobalOptions& g, std::ostream& out) {
  out << (g.format == "json" ? serialize_json(envelope) : render_table(envelope));
}

// --- gauss -----------------------------------------------------------------

int cmd_gauss(long long n, long long m, const GlobalOptions& g, std::ostream& out) {
  if (n < 0) throw UsageError("gauss: n must be nonnegative");
  if (n > 100000) throw UsageError("gauss: n is too large");
  const QPoly p = gauss_binomial(static_cast<std::uint32_t>(n), static_cast<long>(m));

  Json in = Json::object();
  in["n"] = n;
  in["m"] = m;
  Json res = Json::object();
  res["coefficients"] = to_json(p);
  res["degree"] = p.degree();
  res["value_at_one"] = to_json(p.value_at_one());

  std::vector<Check> checks;
  const auto un = static_cast<std::uint32_t>(n);
  checks.push_back({"binomial_limit", p.value_at_one() == binomial(un, static_cast<long>(m)), 0.0});
  if (m >= 0 && m <= n) {
    checks.push_back({"symmetry", p == gauss_binomial(un, static_cast<long>(n - m)), 0.0});
    checks.push_back({"degree", p.degree() == m * (n - m), 0.0});
  }
  for (auto& c : checks) c.max_residual = c.passed ? 0.0 : 1.0;
  emit(make_envelope("gauss", in, res, checks), g, out);
  if (!all_passed(checks)) throw InternalFault("gauss: polynomial identity check failed");
  return kSuccess;
}

// --- qnumber ---------------------------------------------------------------

int cmd_qnumber(long long n, const ParamOptions& po, const GlobalOptions& g, std::ostream& out) {
  if (n < 0) throw UsageError("qnumber: n must be nonnegative");
  if (n > 100000) throw UsageError("qnumber: n is too large");
  const auto param = parse_param(po);
  const QPoly p = q_number(static_cast<std::uint32_t>(n));

  Json in = Json::object();
  in["n"] = n;
  if (param) in["param"] = to_json(*param);
  Json res = Json::object();
  res["coefficients"] = to_json(p);
  res["value_at_one"] = n;

  std::vector<Check> checks;
  if (param) {
    const PreciseComplex value = q_number_value(*param, static_cast<long>(n));
    res["value"] = to_json(to_double(value));
    res["modulus"] = to_double(q_number_modulus(*param, static_cast<long>(n)));
    if (const auto* root = std::get_if<RootOfUnity>(&*param)) {
      const bool vanishes = q_number_is_zero(static_cast<long>(n), *root);
      res["vanishes"] = vanishes;
      res["bracket"] = q_bracket(static_cast<long>(n), HalfRoot(*root));
      const double numeric = std::abs(eval_at_root(p, *root));
      checks.push_back({"zero_predicate", vanishes == (numeric < 1e-9), numeric});
      const double diff = std::abs(to_double(q_number_modulus(*param, static_cast<long>(n))) -
                                   std::abs(q_bracket(static_cast<long>(n), HalfRoot(*root))));
      checks.push_back(residual_check("modulus_equals_abs_bracket", diff, g.tolerance));
    } else {
      const double q = std::get<RealQ>(*param).value();
      double horner = 0.0;
      for (long long k = 0; k < n; ++k) horner = horner * q + 1.0;
      const double scale = std::max(1.0, std::abs(horner));
      const double diff = std::abs(to_double(value.real()) - horner) / scale;
      checks.push_back(residual_check("polynomial_evaluation_relative", diff, g.tolerance));
    }
  }
  emit(make_envelope("qnumber", in, res, checks), g, out);
  if (!all_passed(checks)) throw InternalFault("qnumber: consistency check failed");
  return kSuccess;
}

// --- classify --------------------------------------------------------------

int cmd_classify(long long m, long long j, const GlobalOptions& g, std::ostream& out) {
  if (m < 2 || j < 1 || j > m - 1) throw UsageError("classify: need m >= 2 and 1 <= j <= m-1");
  if (m > 1000000) throw UsageError("classify: m is too large");
  const RootOfUnity root(static_cast<int>(m), static_cast<int>(j));
  const RepClass cls = classify(root);
  const IrrepDecomposition dec = decompose(root);
  const ReducedRoot reduced = canonical_reduce(root);

  Json in = Json::object();
  in["m"] = m;
  in["j"] = j;
  Json res = Json::object();
  res["primitive"] = is_primitive(root);
  res["class"] = std::holds_alternative<IrreducibleFinite>(cls) ? "irreducible_finite" : "reducible";
  res["r"] = dec.block_count;
  res["l"] = dec.block_dim;
  Json red = Json::object();
  red["l"] = reduced.order;
  red["s"] = reduced.index;
  res["reduced_root"] = red;
  res["blocks"] = to_json(dec)["blocks"];

  std::vector<Check> checks;
  const int smallest = smallest_vanishing_index(root);
  checks.push_back({"smallest_vanishing_index", smallest == dec.block_dim, static_cast<double>(std::abs(smallest - dec.block_dim))});
  if (m <= 2000) {
    const InvariantSubspaceReport inv = verify_invariant_subspaces(root, dec);
    checks.push_back({"invariant_subspaces", inv.passed(), static_cast<double>(inv.violations.size())});
  }
  emit(make_envelope("classify", in, res, checks), g, out);
  if (!all_passed(checks)) throw InternalFault("classify: decomposition check failed");
  return kSuccess;
}

// --- ham -------------------------------------------------------------------

int cmd_ham(const ParamOptions& po, const GlobalOptions& g, std::ostream& out) {
  const auto param = parse_param(po);
  if (!param) throw UsageError("ham: exactly one of --root or --real is required");
  const std::size_t dim = resolve_dim(*param, po, 1);
  const SpectrumReport spec = spectrum_report(*param, dim);

  Json res = Json::object();
  res["diagonal"] = spec.diagonal;
  res["blocks"] = spec.blocks ? to_json(*spec.blocks) : Json(nullptr);
  res["block_pattern_verified"] = spec.block_pattern_verified;

  std::vector<Check> checks;
  if (dim >= 2) {
    const double eq = hamiltonian_equivalence_check(*param, dim);
    res["equivalence_residual"] = eq;
    checks.push_back(residual_check("equivalence", eq, g.tolerance));
  }
  double scale = 1.0;
  for (double d : spec.diagonal) scale = std::max(scale, std::abs(d));
  checks.push_back(residual_check("eigensolver_relative", spec.eigensolver_discrepancy / scale, g.tolerance));
  if (spec.blocks) checks.push_back({"block_pattern", spec.block_pattern_verified, 0.0});
  if (const auto* root = std::get_if<RootOfUnity>(&*param); root && dim == static_cast<std::size_t>(root->order())) {
    double pal = 0.0;
    for (std::size_t n = 0; n < dim; ++n) pal = std::max(pal, std::abs(spec.diagonal[n] - spec.diagonal[dim - 1 - n]));
    checks.push_back(residual_check("palindrome", pal, g.tolerance));
    const bool inv = inverse_root_check(*root);
    checks.push_back({"inverse_root", inv, inv ? 0.0 : 1.0});
  }
  emit(make_envelope("ham", param_inputs(*param, dim), res, checks), g, out);
  if (!all_passed(checks)) throw InternalFault("ham: internal consistency check exceeded tolerance");
  return kSuccess;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string scope;
  ParamOptions param;
  int max_m = 20;
  long long n_max = 50;
};

void merge_max(std::vector<Check>& checks, const std::string& name, double residual, double tolerance) {
  for (auto& c : checks) {
    if (c.name == name) {
      c.max_residual = std::max(c.max_residual, residual);
      c.passed = c.passed && residual <= tolerance;
      return;
    }
  }
  checks.push_back(residual_check(name, residual, tolerance));
}

void verify_algebra_one(const DeformParam& param, std::size_t dim, double tol, std::vector<Check>& checks, Json& detail) {
  Json entry = param_inputs(param, dim);
  Json residuals = Json::object();
  for (const auto& r : verify_relations(param, dim)) {
    residuals[to_string(r.relation_id)] = r.max_abs_residual;
    merge_max(checks, "algebra." + to_string(r.relation_id), r.max_abs_residual, tol);
  }
  const IndexRange safe = truncation_safe_subspace(param, dim);
  entry["checked_subspace"] = Json::array({safe.begin, safe.end});
  entry["residuals"] = std::move(residuals);
  detail.push_back(std::move(entry));
}

void verify_polychronakos_one(const DeformParam& param, std::size_t dim, std::size_t n_max, double tol,
                              std::vector<Check>& checks, Json& detail) {
  Json entry = param_inputs(param, dim);
  const double realization = realization_discrepancy(param, dim);
  const double realized_aq = realized_aq_residual(param, dim);
  double direct_aq = 0.0;
  for (const auto& r : verify_relations(param, dim))
    if (r.relation_id == RelationId::Aq) direct_aq = r.max_abs_residual;
  const FRecurrenceReport f = verify_F_recurrence(param, n_max);
  const double f_residual = std::max(f.max_recurrence_residual, f.max_qnumber_residual);
  const bool unitary = unitarity_check(param, dim);

  entry["realization_discrepancy"] = realization;
  entry["realized_aq_residual"] = realized_aq;
  entry["f_recurrence_residual"] = f_residual;
  entry["unitary"] = unitary;
  detail.push_back(std::move(entry));

  merge_max(checks, "polychronakos.realization", realization, tol);
  merge_max(checks, "polychronakos.aq", realized_aq, tol);
  merge_max(checks, "polychronakos.aq_matches_direct", std::abs(realized_aq - direct_aq), tol);
  merge_max(checks, "polychronakos.f_recurrence", f_residual, tol);
  if (!is_root(param)) merge_max(checks, "polychronakos.unitarity_real", unitary ? 0.0 : 1.0, 0.0);
}

std::vector<std::pair<DeformParam, std::size_t>> sweep_params(const VerifyOptions& v) {
  std::vector<std::pair<DeformParam, std::size_t>> out;
  for (int m = 2; m <= v.max_m; ++m)
    for (int j = 1; j < m; ++j) out.emplace_back(RootOfUnity(m, j), static_cast<std::size_t>(m));
  const std::size_t real_dim = v.param.dim ? static_cast<std::size_t>(*v.param.dim) : kSweepRealDim;
  for (double q : kSweepRealQ) out.emplace_back(RealQ(q), real_dim);
  return out;
}

int cmd_verify(const VerifyOptions& v, const GlobalOptions& g, std::ostream& out) {
  if (v.max_m < 2) throw UsageError("--max-m must be at least 2");
  if (v.n_max < 1) throw UsageError("--n-max must be at least 1");
  const auto param = parse_param(v.param);
  std::vector<std::pair<DeformParam, std::size_t>> targets;
  if (param) {
    targets.emplace_back(*param, resolve_dim(*param, v.param, 2));
  } else {
    if (v.param.dim && *v.param.dim < 2) throw UsageError("--dim must be at least 2");
    targets = sweep_params(v);
  }

  const bool do_algebra = v.scope == "algebra" || v.scope == "all";
  const bool do_brackets = v.scope == "brackets" || v.scope == "all";
  const bool do_poly = v.scope == "polychronakos" || v.scope == "all";

  Json in = Json::object();
  in["scope"] = v.scope;
  in["max_m"] = v.max_m;
  in["n_max"] = v.n_max;
  in["tolerance"] = g.tolerance;
  in["param"] = param ? to_json(*param) : Json("sweep");

  Json res = Json::object();
  std::vector<Check> checks;
  if (do_algebra) {
    Json detail = Json::array();
    for (const auto& [p, dim] : targets) verify_algebra_one(p, dim, g.tolerance, checks, detail);
    res["algebra"] = std::move(detail);
  }
  if (do_brackets) {
    const BracketReport report = verify_bracket_relations(v.max_m, g.tolerance);
    Json detail = Json::object();
    for (const auto& rel : report.relations) {
      detail[rel.name] = rel.max_residual;
      checks.push_back(residual_check("brackets." + rel.name, rel.max_residual, g.tolerance));
    }
    res["brackets"] = std::move(detail);
  }
  if (do_poly) {
    Json detail = Json::array();
    for (const auto& [p, dim] : targets)
      verify_polychronakos_one(p, dim, static_cast<std::size_t>(v.n_max), g.tolerance, checks, detail);
    res["polychronakos"] = std::move(detail);
  }
  res["all_passed"] = all_passed(checks);
  emit(make_envelope("verify", in, res, checks), g, out);
  return all_passed(checks) ? kSuccess : kCheckFailed;
}

// --- polychronakos ---------------------------------------------------------

Json complex_list(const std::vector<Complex>& values) {
  Json arr = Json::array();
  for (const auto& z : values) arr.push_back(to_json(z));
  return arr;
}

int cmd_polychronakos(const ParamOptions& po, long long n_max, const GlobalOptions& g, std::ostream& out) {
  const auto param = parse_param(po);
  if (!param) throw UsageError("polychronakos: exactly one of --root or --real is required");
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  const std::size_t dim = resolve_dim(*param, po, 2);

  const RealizedPair pair = realize_deformed(*param, dim);
  std::vector<Complex> a_minus_super;
  std::vector<Complex> a_plus_sub;
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    a_minus_super.push_back(pair.a_minus(n, n + 1));
    a_plus_sub.push_back(pair.a_plus(n + 1, n));
  }
  const FRecurrenceReport f = verify_F_recurrence(*param, static_cast<std::size_t>(n_max));

  Json res = Json::object();
  res["u_plus"] = complex_list(scaling_function(*param, ScalingKind::UPlus, dim).values);
  res["u_minus"] = complex_list(scaling_function(*param, ScalingKind::UMinus, dim).values);
  res["a_minus_superdiagonal"] = complex_list(a_minus_super);
  res["a_plus_subdiagonal"] = complex_list(a_plus_sub);
  res["F"] = complex_list(f.values);
  res["unitary"] = unitarity_check(*param, dim);

  std::vector<Check> checks;
  Json detail = Json::array();
  verify_polychronakos_one(*param, dim, static_cast<std::size_t>(n_max), g.tolerance, checks, detail);
  Json in = param_inputs(*param, dim);
  in["n_max"] = n_max;
  emit(make_envelope("polychronakos", in, res, checks), g, out);
  if (!all_passed(checks)) throw InternalFault("polychronakos: realization check exceeded tolerance");
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss polynomials, q-numbers and the q-deformed oscillator", "qosc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  GlobalOptions g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tolerance", g.tolerance, "absolute tolerance for reported checks")->check(CLI::PositiveNumber);

  long long gauss_n = 0, gauss_m = 0;
  auto* gauss = app.add_subcommand("gauss", "Gauss polynomial [n over m]");
  gauss->add_option("n", gauss_n)->required();
  gauss->add_option("m", gauss_m)->required();

  long long qn_n = 0;
  ParamOptions qn_param;
  auto* qnumber = app.add_subcommand("qnumber", "Q-number {n}_q, optionally evaluated at a parameter");
  qnumber->add_option("n", qn_n)->required();
  add_param_options(qnumber, qn_param);

  long long cls_m = 0, cls_j = 0;
  auto* classify_cmd = app.add_subcommand("classify", "reducibility of the Fock module at q_j");
  classify_cmd->add_option("m", cls_m)->required();
  classify_cmd->add_option("j", cls_j)->required();

  ParamOptions ham_param;
  auto* ham = app.add_subcommand("ham", "deformed oscillator Hamiltonian and its block pattern");
  add_param_options(ham, ham_param);

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("scope", ver.scope)->required()->check(CLI::IsMember({"algebra", "brackets", "polychronakos", "all"}));
  add_param_options(verify, ver.param);
  verify->add_option("--max-m", ver.max_m, "largest root order in sweeps");
  verify->add_option("--n-max", ver.n_max, "largest n in the F-recurrence check");

  ParamOptions poly_param;
  long long poly_n_max = 50;
  auto* poly = app.add_subcommand("polychronakos", "realization through undeformed operators");
  add_param_options(poly, poly_param);
  poly->add_option("--n-max", poly_n_max, "largest n in the F-recurrence check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gauss) return cmd_gauss(gauss_n, gauss_m, g, out);
    if (*qnumber) return cmd_qnumber(qn_n, qn_param, g, out);
    if (*classify_cmd) return cmd_classify(cls_m, cls_j, g, out);
    if (*ham) return cmd_ham(ham_param, g, out);
    if (*verify) return cmd_verify(ver, g, out);
    if (*poly) return cmd_polychronakos(poly_param, poly_n_max, g, out);
  } catch (const UsageError& e) {
    err << "qosc: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidParameter& e) {
    err << "qosc: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionTooSmall& e) {
    err << "qosc: " << e.what() << "\n";
    return kUsageError;
  } catch (const InternalFault& e) {
    err << "qosc: internal consistency fault: " << e.what() << "\n";
    return kInternalFault;
  } catch (const std::exception& e) {
    err << "qosc: internal error: " << e.what() << "\n";
    return kInternalFault;
  }
  return kUsageError;
}

}  // namespace qosc::cli
