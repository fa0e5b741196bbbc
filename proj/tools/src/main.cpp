#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "pencilkit/cli/matrix_market.hpp"
#include "pencilkit/cli/runner.hpp"

namespace pk = pencilkit;
namespace cli = pencilkit::cli;

namespace {

struct Flags {
  std::string config;
  std::string a_path, b_path;
  std::string generator;
  std::vector<std::string> params;  // key=value, values parsed as JSON when possible
  std::optional<double> tol_zero;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool pretty = false;
  bool timings = false;
  std::optional<int> n, cases, max_dim, trials, trial_dim;
  std::vector<int> sizes;
  std::string format = "array";
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON problem configuration");
  sub->add_option("--A", f.a_path, "Matrix Market file holding A");
  sub->add_option("--B", f.b_path, "Matrix Market file holding B");
  sub->add_option("--generator", f.generator,
                  "diag-example, green-kernel, weighted, fem-laplacian, random-indefinite, "
                  "random-definite, jordan, invariant-kernel, neutral");
  sub->add_option("--param", f.params, "generator parameter key=value (repeatable)");
  sub->add_option("--n", f.n, "problem size for generators");
  sub->add_option("--tol-zero", f.tol_zero, "override the zero tolerance");
  sub->add_option("--seed", f.seed, "seed for randomized tasks and generators");
  sub->add_option("--out", f.out, "write the report (or matrices, for export) here");
  sub->add_flag("--pretty", f.pretty, "print a human-readable table instead of JSON");
  sub->add_flag("--timings", f.timings, "include wall-clock timings in the report");
}

nlohmann::json parse_value(const std::string& v) {
  try {
    return nlohmann::json::parse(v);
  } catch (const nlohmann::json::parse_error&) {
    return v;
  }
}

cli::ProblemConfig build_config(const Flags& f, const std::string& task) {
  cli::ProblemConfig c = f.config.empty() ? cli::ProblemConfig{} : cli::load_config(f.config);
  if (!task.empty()) c.tasks = {task};
  if (!f.a_path.empty() || !f.b_path.empty()) {
    c.source = cli::SourceKind::matrix_files;
    c.a_path = f.a_path;
    c.b_path = f.b_path;
  }
  if (!f.generator.empty()) {
    c.source = cli::SourceKind::generator;
    c.generator = f.generator;
    c.parameters = nlohmann::json::object();
  }
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw cli::ConfigError("--param expects key=value, got '" + kv + "'");
    c.parameters[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
  }
  if (f.n) c.parameters["n"] = *f.n;
  if (f.tol_zero) {
    cli::set_tolerance(c.tolerances, "zero", *f.tol_zero);
    c.tolerance_overrides["zero"] = *f.tol_zero;
  }
  if (f.seed) c.seed = *f.seed;
  if (f.cases) c.verify_cases = *f.cases;
  if (f.max_dim) c.verify_max_dim = *f.max_dim;
  if (f.trials) c.bounds_trials = *f.trials;
  if (f.trial_dim) c.bounds_trial_dim = *f.trial_dim;
  if (!f.sizes.empty()) c.residual_sizes = f.sizes;
  return c;
}

int emit(const cli::RunOutcome& outcome, const Flags& f) {
  const std::string text = f.pretty ? cli::render_pretty(outcome.report) : outcome.report.dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) {
      std::cerr << "pencilkit: cannot write '" << f.out << "'\n";
      return cli::kExitInputError;
    }
    os << text;
  }
  if (outcome.exit_code != cli::kExitOk && outcome.report.contains("error"))
    std::cerr << "pencilkit: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}

int export_matrices(const Flags& f) {
  const cli::ProblemConfig c = build_config(f, "");
  const pk::SymmetricPencil p = cli::make_pencil(c);
  const std::string prefix = f.out.empty() ? "pencil" : f.out;
  const auto fmt = f.format == "coordinate" ? cli::MmFormat::coordinate : cli::MmFormat::array;
  cli::write_matrix_market(prefix + "_A.mtx", p.A(), fmt);
  cli::write_matrix_market(prefix + "_B.mtx", p.B(), fmt);
  std::cout << prefix << "_A.mtx\n" << prefix << "_B.mtx\n";
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pencilkit: symmetric pencils with indefinite B"};
  app.set_version_flag("--version", cli::kToolVersion);
  app.require_subcommand(1);

  Flags f;
  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"solve", "reduce", "relation", "bounds", "verify", "demo-residual"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, f);
    subs[name] = sub;
  }
  subs["solve"]->description("finite eigenvalues with sign types and residuals");
  subs["reduce"]->description("Krein-space reduction by both routes and the correspondence checks");
  subs["relation"]->description("linear-relation pipeline for singular B");
  subs["bounds"]->description("Rayleigh-Ritz bounds over trial subspaces");
  subs["bounds"]->add_option("--trials", f.trials, "number of random trial subspaces");
  subs["bounds"]->add_option("--trial-dim", f.trial_dim, "dimension of each random trial subspace");
  subs["verify"]->description("seeded batch of property checks");
  subs["verify"]->add_option("--cases", f.cases, "number of random cases");
  subs["verify"]->add_option("--max-dim", f.max_dim, "largest dimension in the batch");
  subs["demo-residual"]->description("residual indicator sweep for the weighted Green-kernel pencil");
  subs["demo-residual"]->add_option("--sizes", f.sizes, "grid sizes (even)");

  CLI::App* run_all = app.add_subcommand("run", "run the tasks listed in --config");
  add_common(run_all, f);
  CLI::App* exp = app.add_subcommand("export", "write a generated pencil as Matrix Market files");
  add_common(exp, f);
  exp->add_option("--format", f.format, "array or coordinate")->check(CLI::IsMember({"array", "coordinate"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInputError;
  }

  try {
    if (exp->parsed()) return export_matrices(f);
    std::string task;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) task = name;
    if (run_all->parsed() && f.config.empty()) throw cli::ConfigError("run needs --config");
    const cli::ProblemConfig config = build_config(f, task);
    return emit(cli::run(config, cli::RunOptions{f.timings}), f);
  } catch (const pk::Error& e) {
    std::cerr << "pencilkit: " << e.what() << "\n";
    return cli::kExitInputError;
  }
}
