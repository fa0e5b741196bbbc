#include "pencilkit/cli/runner.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "pencilkit/cli/matrix_market.hpp"
#include "pencilkit/discretize.hpp"
#include "pencilkit/generators.hpp"
#include "pencilkit/reduction.hpp"
#include "pencilkit/relation.hpp"
#include "pencilkit/variational.hpp"

namespace pencilkit::cli {

namespace {

using nlohmann::json;

constexpr double kIndicatorDelta = 0.05;
constexpr double kAgreementTol = 1e-9;
constexpr double kSpectrumTol = 1e-8;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json complex_list(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

// Every task result carries its own verdict flag; false means a verification
// inequality or correspondence check failed.
struct TaskResult {
  json body = json::object();
  bool verdict = true;
};

template <typename T>
T param(const json& p, const char* key, T fallback) {
  if (!p.contains(key)) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("generator parameter '") + key + "': " + e.what());
  }
}

Matrix matrix_param(const json& p, const char* key) {
  if (!p.contains(key)) throw ConfigError(std::string("generator parameter '") + key + "' is required");
  const json& v = p[key];
  if (!v.is_array() || v.empty()) throw ConfigError(std::string("generator parameter '") + key + "' must be a list");
  if (v[0].is_number()) {
    const auto d = param<std::vector<double>>(p, key, {});
    return Vector(Eigen::Map<const Vector>(d.data(), static_cast<Eigen::Index>(d.size()))).asDiagonal();
  }
  const auto rows = param<std::vector<std::vector<double>>>(p, key, {});
  Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ConfigError(std::string("generator parameter '") + key + "' is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::function<double(double)> weight_param(const json& p, const char* fallback) {
  const std::string w = param<std::string>(p, "weight", fallback);
  if (w == "2x-1") return [](double x) { return 2.0 * x - 1.0; };
  if (w == "x") return [](double x) { return x; };
  if (w == "1") return [](double) { return 1.0; };
  throw ConfigError("unknown weight '" + w + "' (expected 2x-1, x or 1)");
}

Boundary boundary_param(const json& p) {
  const std::string b = param<std::string>(p, "boundary", "dirichlet-dirichlet");
  if (b == "dirichlet-dirichlet") return Boundary::dirichlet_dirichlet;
  if (b == "dirichlet-neumann") return Boundary::dirichlet_neumann;
  throw ConfigError("unknown boundary '" + b + "'");
}

json eigen_items_json(const PencilSpectrum& spec) {
  json items = json::array();
  for (const auto& it : spec.items) {
    items.push_back({{"value", complex_json(it.value)},
                     {"multiplicity", it.algebraic_multiplicity},
                     {"geometric_multiplicity", it.eigenvectors.cols()},
                     {"sign_type", std::string(to_string(it.sign_type))},
                     {"residual", it.residual}});
  }
  return items;
}

TaskResult task_solve(const SymmetricPencil& p, const ProblemConfig& c) {
  const PencilSpectrum spec = pencil_eigenvalues(p, c.tolerances);
  TaskResult r;
  r.body = {{"dim", p.dim()}, {"infinite_count", spec.infinite_count}, {"eigenvalues", eigen_items_json(spec)}};
  return r;
}

json correspondence_json(const CorrespondenceReport& rep) {
  json chains = json::array();
  for (const auto& ch : rep.chains)
    chains.push_back({{"value", complex_json(ch.value)},
                      {"length", ch.length},
                      {"direction", ch.from_pencil ? "pencil->reduced" : "reduced->pencil"},
                      {"residual", ch.residual},
                      {"roundtrip", ch.roundtrip}});
  json spaces = json::array();
  for (const auto& e : rep.eigenspaces)
    spaces.push_back({{"value", complex_json(e.value)},
                      {"pencil_dim", e.pencil_dim},
                      {"reduced_dim", e.reduced_dim},
                      {"gap", e.gap}});
  return {{"pencil_values", complex_list(rep.pencil_values)},
          {"reduced_values", complex_list(rep.reduced_values)},
          {"scale", rep.scale},
          {"hausdorff", rep.hausdorff},
          {"counts_match", rep.counts_match},
          {"max_angle", rep.max_angle},
          {"max_chain_residual", rep.max_chain_residual},
          {"krein_symmetry", rep.krein_symmetry},
          {"eigenspaces", spaces},
          {"chains", chains},
          {"pass", rep.pass}};
}

TaskResult task_reduce(const SymmetricPencil& p, const ProblemConfig& c) {
  const Tolerances& tol = c.tolerances;
  TaskResult r;
  const ReducedOperator direct = reduce_direct(p, tol);
  r.body["direct"] = {{"construction", std::string(to_string(direct.construction_tag))},
                      {"krein_symmetry_residual", direct.krein_symmetry_residual()}};
  try {
    const ReducedOperator inv = reduce_via_inverse(p, tol);
    const double agree = reduction_agreement(direct, inv);
    r.body["via_inverse"] = {{"available", true},
                             {"construction", std::string(to_string(inv.construction_tag))},
                             {"agreement", agree},
                             {"pass", agree <= kAgreementTol}};
    r.verdict = r.verdict && agree <= kAgreementTol;
  } catch (const SingularA& e) {
    r.body["via_inverse"] = {{"available", false}, {"reason", e.what()}};
  }
  const CorrespondenceReport rep = spectral_correspondence_report(p, tol);
  r.body["correspondence"] = correspondence_json(rep);
  const NegativeSquaresMatch ns = negative_squares_match(p, tol);
  r.body["negative_squares"] = {{"pi_A", ns.pi_A}, {"pi_S", ns.pi_S}, {"verdict", ns.verdict}};
  r.verdict = r.verdict && rep.pass && ns.verdict;
  return r;
}

json relation_eigen_json(const RelationSpectrum& s) {
  json out = json::array();
  for (const auto& e : s.eigen)
    out.push_back({{"value", complex_json(e.value)}, {"multiplicity", e.multiplicity}});
  return out;
}

TaskResult task_relation(const SymmetricPencil& p, const ProblemConfig& c) {
  const Tolerances& tol = c.tolerances;
  TaskResult r;
  const AbsSqrtSign parts = abs_sqrt_sign(p.B(), tol.zero);
  r.body["kernel_dim"] = parts.kernel.rank();
  const OrthoConditions cond = orthocomplemented_conditions(p, tol);
  r.body["conditions"] = {{"range_condition", cond.cond_range}, {"kernel_invariant", cond.cond_invariant}};

  const LinearRelation s0 = relation_from_pencil(p, tol);
  const MultivaluedPart mv0 = multivalued_part(s0, tol);
  r.body["S0"] = {{"dim", s0.dim()}, {"multivalued_dim", mv0.values.rank()}};

  const LinearRelation st = stilde_quotient(p, tol);
  const MultivaluedPart mv = multivalued_part(st, tol);
  const RelationSpectrum sp = relation_eigenvalues(st, tol);
  json q = {{"dim", st.ambient_dim()},
            {"T0_dim", mv.values.rank()},
            {"all_lambda", sp.all_lambda},
            {"eigenvalues", relation_eigen_json(sp)}};

  // σ_p(S̃) against the finite spectrum of the pencil.
  const PencilSpectrum pencil = pencil_eigenvalues(p, tol);
  std::vector<Complex> rel;
  for (const auto& e : sp.eigen)
    for (int k = 0; k < e.multiplicity; ++k) rel.push_back(e.value);
  const auto pv = pencil.multiset();
  std::vector<Complex> both = rel;
  both.insert(both.end(), pv.begin(), pv.end());
  const double dist = rel.size() == pv.size() ? hausdorff_distance(rel, pv) / eigenvalue_scale(both) : INFINITY;
  q["pencil_spectrum_distance"] = dist;
  q["spectra_match"] = dist <= kSpectrumTol;
  r.verdict = r.verdict && dist <= kSpectrumTol;

  try {
    const OperatorPart op = operator_part(st, tol);
    q["operator_part"] = {{"ortho_complemented", true},
                          {"space_dim", op.space.rank()},
                          {"is_operator", op.is_operator},
                          {"domain_matches", op.domain_matches},
                          {"range_in_space", op.range_in_space},
                          {"has_matrix", op.op.has_value()},
                          {"spectrum_distance", op.spectrum_distance},
                          {"point_spectra_match", op.point_spectra_match},
                          {"t_adjoint_distance", op.t_adjoint_distance},
                          {"ts_adjoint_distance", op.ts_adjoint_distance},
                          {"t_selfadjoint", op.t_selfadjoint},
                          {"ts_selfadjoint", op.ts_selfadjoint},
                          {"selfadjoint_equivalence", op.selfadjoint_equivalence}};
    r.verdict = r.verdict && op.is_operator && op.point_spectra_match && op.selfadjoint_equivalence;
  } catch (const NotOrthoComplemented& e) {
    // A degenerate T(0) is a property of the problem, reported as such.
    q["operator_part"] = {{"ortho_complemented", false}, {"witness_dim", e.witness().cols()}, {"reason", e.what()}};
  }
  r.body["stilde"] = q;
  return r;
}

json report_json(const RayleighRitzReport& rep) {
  return {{"trial_dim", rep.trial_dim},   {"mu_plus", rep.mu_plus},       {"mu_minus", rep.mu_minus},
          {"neutral_or_complex", complex_list(rep.neutral_or_complex)},
          {"full_plus", rep.full_plus},   {"full_minus", rep.full_minus}, {"scale", rep.scale},
          {"bound_verdicts", rep.bound_verdicts}, {"minus_verdicts", rep.minus_verdicts},
          {"pass", rep.all_pass()}};
}

TaskResult task_bounds(const SymmetricPencil& p, const ProblemConfig& c) {
  const Tolerances& tol = c.tolerances;
  const int n = p.dim();
  TaskResult r;
  json trials = json::array();
  if (!c.trial_subspaces.empty()) {
    for (const auto& cols : c.trial_subspaces) {
      Matrix v(n, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != static_cast<std::size_t>(n))
          throw ConfigError("bounds: trial vector length does not match the dimension");
        for (int i = 0; i < n; ++i) v(i, j) = cols[j][i];
      }
      const RayleighRitzReport rep = rayleigh_ritz_bounds(p, orthonormalize(v, tol.rank), tol);
      trials.push_back(report_json(rep));
      r.verdict = r.verdict && rep.all_pass();
    }
  } else {
    const int k = c.bounds_trial_dim > 0 ? std::min(c.bounds_trial_dim, n) : std::max(1, n / 2);
    Rng rng(derive_seed(c.seed.value_or(0), 0xB0'0D5));
    for (int t = 0; t < c.bounds_trials; ++t) {
      int redraws = 0;
      for (;;) {
        const Subspace v = random_subspace(n, k, rng);
        try {
          const RayleighRitzReport rep = rayleigh_ritz_bounds(p, v, tol);
          json j = report_json(rep);
          j["redraws"] = redraws;
          trials.push_back(j);
          r.verdict = r.verdict && rep.all_pass();
          break;
        } catch (const DegenerateTrialSpace&) {
          if (++redraws > 50) throw;
        }
      }
    }
  }
  r.body = {{"trials", trials}};
  return r;
}

struct PropertyTally {
  int checked = 0;
  int passed = 0;
  double worst = 0.0;

  json to_json() const { return {{"checked", checked}, {"passed", passed}, {"worst", worst}}; }
};

TaskResult task_verify(const ProblemConfig& c) {
  const Tolerances& tol = c.tolerances;
  const std::uint64_t seed = c.seed.value_or(0);
  PropertyTally corr, pi, agree, bounds, relation;
  json failures = json::array();
  auto fail = [&](int i, const char* prop, const std::string& detail) {
    if (failures.size() < 20) failures.push_back({{"case", i}, {"property", prop}, {"detail", detail}});
  };

  for (int i = 0; i < c.verify_cases; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = 2 + i % (c.verify_max_dim - 1);
    try {
      const SymmetricPencil p = random_indefinite_pencil(n, rng);
      const CorrespondenceReport rep = spectral_correspondence_report(p, tol);
      ++corr.checked;
      corr.worst = std::max(corr.worst, rep.hausdorff / rep.scale);
      if (rep.pass) ++corr.passed; else fail(i, "correspondence", "hausdorff=" + std::to_string(rep.hausdorff));

      ++pi.checked;
      if (negative_squares_match(p, tol).verdict) ++pi.passed; else fail(i, "negative_squares", "");

      if (inertia(p.A(), tol.zero).n_zero == 0) {
        const double a = reduction_agreement(reduce_direct(p, tol), reduce_via_inverse(p, tol));
        ++agree.checked;
        agree.worst = std::max(agree.worst, a);
        if (a <= kAgreementTol) ++agree.passed; else fail(i, "reduction_agreement", std::to_string(a));
      }

      const SymmetricPencil d = random_definite_pencil(n, rng);
      const Subspace v = random_subspace(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)), rng);
      try {
        const RayleighRitzReport rr = rayleigh_ritz_bounds(d, v, tol);
        ++bounds.checked;
        if (rr.all_pass()) ++bounds.passed; else fail(i, "rayleigh_ritz", "");
      } catch (const DegenerateTrialSpace&) {
        // Skipped: the bound is only claimed for nonsingular compressions.
      }

      if (n >= 3) {
        const SymmetricPencil q = invariant_kernel_pencil(n, std::min(1 + i % 2, n - 1), rng);
        const OperatorPart op = operator_part(stilde_quotient(q, tol), tol);
        ++relation.checked;
        relation.worst = std::max(relation.worst, op.spectrum_distance);
        if (op.is_operator && op.point_spectra_match && op.selfadjoint_equivalence) ++relation.passed;
        else fail(i, "operator_part", "spectrum_distance=" + std::to_string(op.spectrum_distance));
      }
    } catch (const Error& e) {
      fail(i, "exception", e.what());
      ++corr.checked;
    }
  }
  TaskResult r;
  r.body = {{"seed", seed},
            {"cases", c.verify_cases},
            {"max_dim", c.verify_max_dim},
            {"properties",
             {{"correspondence", corr.to_json()},
              {"negative_squares", pi.to_json()},
              {"reduction_agreement", agree.to_json()},
              {"rayleigh_ritz", bounds.to_json()},
              {"operator_part", relation.to_json()}}},
            {"failures", failures}};
  for (const auto* t : {&corr, &pi, &agree, &bounds, &relation})
    if (t->passed != t->checked) r.verdict = false;
  return r;
}

TaskResult task_demo_residual(const ProblemConfig& c) {
  TaskResult r;
  json rows = json::array();
  bool above = true, monotone = true;
  double prev = INFINITY;
  for (int n : c.residual_sizes) {
    const double w = residual_indicator(n, IndicatorCase::weighted);
    const double ctl = residual_indicator(n, IndicatorCase::control);
    rows.push_back({{"n", n}, {"weighted", w}, {"control", ctl}});
    above = above && w >= kIndicatorDelta;
    monotone = monotone && ctl < prev;
    prev = ctl;
  }
  r.body = {{"delta", kIndicatorDelta}, {"rows", rows}, {"weighted_above_delta", above}, {"control_decreasing", monotone}};
  r.verdict = above && monotone;
  return r;
}

}  // namespace

SymmetricPencil make_pencil(const ProblemConfig& c) {
  if (c.source == SourceKind::matrix_files) {
    SymMatrix a = ingest_matrix(c.a_path);
    SymMatrix b = ingest_matrix(c.b_path);
    if (a.dim() != b.dim()) throw ConfigError("A and B have different dimensions");
    return SymmetricPencil(std::move(a), std::move(b));
  }
  if (c.source != SourceKind::generator) throw ConfigError("no problem source configured");
  const json& p = c.parameters;
  const std::string& g = c.generator;
  const int n = param<int>(p, "n", 32);
  try {
    if (g == "diag-example") {
      const Matrix a = matrix_param(p, "A"), b = matrix_param(p, "B");
      if (a.rows() != b.rows()) throw ConfigError("diag-example: A and B differ in size");
      return SymmetricPencil(SymMatrix(a), SymMatrix(b));
    }
    if (g == "green-kernel") return green_kernel_pencil(GridSpec{n, Scheme::midpoint_nystrom, 0.0, 1.0});
    if (g == "weighted") {
      const std::string src = param<std::string>(p, "source_operator", "green-kernel");
      if (src == "fem-laplacian")
        return weighted_multiplication_pencil(weight_param(p, "x"), GridSpec{n, Scheme::piecewise_linear_fem, 0.0, 1.0},
                                              OperatorSource::fem_laplacian, boundary_param(p));
      if (src != "green-kernel" && src != "identity") throw ConfigError("unknown source_operator '" + src + "'");
      return weighted_multiplication_pencil(weight_param(p, "2x-1"), GridSpec{n, Scheme::midpoint_nystrom, 0.0, 1.0},
                                            src == "identity" ? OperatorSource::identity : OperatorSource::green_kernel);
    }
    if (g == "fem-laplacian") {
      const GridSpec grid{n, Scheme::piecewise_linear_fem, 0.0, 1.0};
      const Boundary bd = boundary_param(p);
      return SymmetricPencil(fem_laplacian(grid, bd), fem_mass(grid, bd, weight_param(p, "1")));
    }
    Rng rng(param<std::uint64_t>(p, "seed", c.seed.value_or(0)));
    const int small = param<int>(p, "n", 4);
    if (g == "random-indefinite") return random_indefinite_pencil(small, rng, param<bool>(p, "mixed", false));
    if (g == "random-definite") return random_definite_pencil(small, rng);
    if (g == "jordan") return random_jordan_pencil(small, rng).pencil;
    if (g == "invariant-kernel") return invariant_kernel_pencil(small, param<int>(p, "k", 1), rng);
    if (g == "neutral") return neutral_multivalued_pencil(small, rng);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("generator '") + g + "': " + e.what());
  }
  throw ConfigError("unknown generator '" + g + "'");
}

RunOutcome run(const ProblemConfig& config, const RunOptions& options) {
  RunOutcome out;
  json& rep = out.report;
  rep["tool"] = "pencilkit";
  rep["version"] = kToolVersion;
  rep["config"] = config.to_json();
  rep["tolerances"] = tolerances_to_json(config.tolerances);

  std::optional<SymmetricPencil> pencil;
  try {
    config.validate();
    if (config.source != SourceKind::none) pencil = make_pencil(config);
  } catch (const Error& e) {
    rep["status"] = "input-error";
    rep["error"] = e.what();
    rep["tasks"] = json::array();
    out.exit_code = kExitInputError;
    return out;
  }
  if (pencil) {
    rep["problem"] = {{"dim", pencil->dim()},
                      {"A_asymmetry", pencil->A().asymmetry()},
                      {"B_asymmetry", pencil->B().asymmetry()}};
  }

  json tasks = json::array();
  bool any_error = false, any_fail = false;
  for (const auto& name : config.tasks) {
    json entry{{"task", name}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      TaskResult r;
      if (name == "solve") r = task_solve(*pencil, config);
      else if (name == "reduce") r = task_reduce(*pencil, config);
      else if (name == "relation") r = task_relation(*pencil, config);
      else if (name == "bounds") r = task_bounds(*pencil, config);
      else if (name == "verify") r = task_verify(config);
      else r = task_demo_residual(config);
      entry["status"] = "ok";
      entry["verdict"] = r.verdict;
      entry["result"] = std::move(r.body);
      any_fail = any_fail || !r.verdict;
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["error"] = e.what();
      any_error = true;
    }
    if (options.timings)
      entry["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    tasks.push_back(std::move(entry));
  }
  rep["tasks"] = std::move(tasks);
  rep["status"] = any_error ? "task-error" : (any_fail ? "verification-failed" : "ok");
  out.exit_code = any_error || any_fail ? kExitFailure : kExitOk;
  return out;
}

namespace {

std::string num(const json& v) {
  if (v.is_null()) return "nan";
  if (!v.is_number()) return v.dump();
  std::ostringstream ss;
  ss << std::setprecision(6) << v.get<double>();
  return ss.str();
}

std::string cnum(const json& z) {
  const double im = z["im"].get<double>();
  if (im == 0.0) return num(z["re"]);
  return num(z["re"]) + (im < 0 ? " - " : " + ") + num(json(std::abs(im))) + "i";
}

}  // namespace

std::string render_pretty(const json& report) {
  std::ostringstream os;
  os << "pencilkit " << report.value("version", "") << "  status: " << report.value("status", "") << "\n";
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("problem")) os << "dimension: " << report["problem"]["dim"] << "\n";
  for (const auto& t : report["tasks"]) {
    os << "\n[" << t["task"].get<std::string>() << "] " << t["status"].get<std::string>();
    if (t.contains("verdict")) os << (t["verdict"].get<bool>() ? "  verdict: pass" : "  verdict: FAIL");
    os << "\n";
    if (t["status"] == "error") {
      os << "  " << t["error"].get<std::string>() << "\n";
      continue;
    }
    const json& r = t["result"];
    const std::string name = t["task"];
    if (name == "solve") {
      os << "  " << std::left << std::setw(28) << "eigenvalue" << std::setw(10) << "type" << std::setw(6) << "mult"
         << "residual\n";
      for (const auto& e : r["eigenvalues"])
        os << "  " << std::setw(28) << cnum(e["value"]) << std::setw(10) << e["sign_type"].get<std::string>()
           << std::setw(6) << e["multiplicity"].get<int>() << num(e["residual"]) << "\n";
      os << "  infinite eigenvalues: " << r["infinite_count"] << "\n";
    } else if (name == "reduce") {
      const json& c = r["correspondence"];
      os << "  hausdorff/scale " << num(json(c["hausdorff"].get<double>() / c["scale"].get<double>()))
         << "  max angle " << num(c["max_angle"]) << "  max chain residual " << num(c["max_chain_residual"]) << "\n";
      os << "  pi(A) = " << r["negative_squares"]["pi_A"] << "  pi(S) = " << r["negative_squares"]["pi_S"] << "\n";
      if (r["via_inverse"]["available"].get<bool>())
        os << "  direct vs inverse route: " << num(r["via_inverse"]["agreement"]) << "\n";
    } else if (name == "relation") {
      const json& q = r["stilde"];
      os << "  dim Ker B " << r["kernel_dim"] << "  dim T(0) " << q["T0_dim"] << "  spectra match "
         << q["spectra_match"] << "\n";
      os << "  conditions: range " << r["conditions"]["range_condition"] << ", kernel invariant "
         << r["conditions"]["kernel_invariant"] << "\n";
      const json& op = q["operator_part"];
      if (op["ortho_complemented"].get<bool>())
        os << "  operator part: operator " << op["is_operator"] << ", spectrum distance "
           << num(op["spectrum_distance"]) << ", selfadjoint " << op["t_selfadjoint"] << "/" << op["ts_selfadjoint"]
           << "\n";
      else
        os << "  T(0) is not ortho-complemented (isotropic dimension " << op["witness_dim"] << ")\n";
    } else if (name == "bounds") {
      int i = 0;
      for (const auto& tr : r["trials"]) {
        os << "  trial " << i++ << " (dim " << tr["trial_dim"] << "):";
        for (std::size_t m = 0; m < tr["bound_verdicts"].size(); ++m)
          os << "  " << num(tr["mu_plus"][m]) << " >= " << num(tr["full_plus"][m]);
        os << (tr["pass"].get<bool>() ? "  ok" : "  VIOLATED") << "\n";
      }
    } else if (name == "verify") {
      for (const auto& [prop, tally] : r["properties"].items())
        os << "  " << std::left << std::setw(22) << prop << tally["passed"] << "/" << tally["checked"] << "\n";
    } else if (name == "demo-residual") {
      os << "  " << std::left << std::setw(8) << "n" << std::setw(14) << "weighted" << "control\n";
      for (const auto& row : r["rows"])
        os << "  " << std::setw(8) << row["n"].get<int>() << std::setw(14) << num(row["weighted"])
           << num(row["control"]) << "\n";
    }
  }
  return os.str();
}

}  // namespace pencilkit::cli
