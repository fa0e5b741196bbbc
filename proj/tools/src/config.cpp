#include "pencilkit/cli/config.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>

namespace pencilkit::cli {

namespace {

using nlohmann::json;

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  return p.is_absolute() ? path : (std::filesystem::path(base_dir) / p).string();
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

bool needs_source(const std::string& task) { return task != "verify" && task != "demo-residual"; }

}  // namespace

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> tasks{"solve", "reduce", "relation", "bounds", "verify", "demo-residual"};
  return tasks;
}

void set_tolerance(Tolerances& tol, const std::string& name, double value) {
  if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
  if (name == "zero") tol.zero = value;
  else if (name == "ortho") tol.ortho = value;
  else if (name == "rank") tol.rank = value;
  else if (name == "eig") tol.eig = value;
  else if (name == "type") tol.type = value;
  else if (name == "imag") tol.imag = value;
  else if (name == "chain") tol.chain = value;
  else if (name == "det") tol.det = value;
  else if (name == "cluster") tol.cluster = value;
  else if (name == "bound") tol.bound = value;
  else throw ConfigError("unknown tolerance '" + name + "'");
}

json tolerances_to_json(const Tolerances& tol) {
  return json{{"zero", tol.zero}, {"ortho", tol.ortho}, {"rank", tol.rank},   {"eig", tol.eig},
              {"type", tol.type}, {"imag", tol.imag},   {"chain", tol.chain}, {"det", tol.det},
              {"cluster", tol.cluster}, {"bound", tol.bound}};
}

void ProblemConfig::validate() const {
  if (tasks.empty()) throw ConfigError("config: at least one task is required");
  for (const auto& t : tasks) {
    if (std::find(known_tasks().begin(), known_tasks().end(), t) == known_tasks().end())
      throw ConfigError("config: unknown task '" + t + "'");
    if (needs_source(t) && source == SourceKind::none)
      throw ConfigError("config: task '" + t + "' needs matrix files or a generator");
  }
  if (source == SourceKind::matrix_files) {
    for (const auto* p : {&a_path, &b_path}) {
      if (p->empty()) throw ConfigError("config: both A and B paths are required");
      if (!std::filesystem::exists(*p)) throw ConfigError("config: file not found: " + *p);
    }
  }
  if (source == SourceKind::generator && generator.empty()) throw ConfigError("config: generator name missing");
  if (verify_cases < 1) throw ConfigError("config: verify.cases must be positive");
  if (verify_max_dim < 2) throw ConfigError("config: verify.max_dim must be at least 2");
  if (bounds_trials < 1) throw ConfigError("config: bounds.trials must be positive");
  if (bounds_trial_dim < 0) throw ConfigError("config: bounds.trial_dim must be nonnegative");
  for (int n : residual_sizes)
    if (n < 4 || n % 2 != 0) throw ConfigError("config: demo-residual sizes must be even and at least 4");
}

json ProblemConfig::to_json() const {
  json src;
  if (source == SourceKind::matrix_files)
    src = {{"type", "matrix-files"}, {"A", a_path}, {"B", b_path}};
  else if (source == SourceKind::generator)
    src = {{"type", "generator"}, {"name", generator}, {"parameters", parameters}};
  else
    src = nullptr;
  json j{{"source", src}, {"tasks", tasks}, {"tolerance_overrides", tolerance_overrides}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["verify"] = {{"cases", verify_cases}, {"max_dim", verify_max_dim}};
  j["bounds"] = {{"trials", bounds_trials}, {"trial_dim", bounds_trial_dim}, {"subspaces", trial_subspaces}};
  j["demo_residual"] = {{"sizes", residual_sizes}};
  return j;
}

ProblemConfig parse_config(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  ProblemConfig c;
  if (j.contains("source") && !j["source"].is_null()) {
    const json& s = j["source"];
    const std::string type = get_or<std::string>(s, "type", "");
    if (type == "matrix-files") {
      c.source = SourceKind::matrix_files;
      c.a_path = resolve(get_or<std::string>(s, "A", ""), base_dir);
      c.b_path = resolve(get_or<std::string>(s, "B", ""), base_dir);
    } else if (type == "generator") {
      c.source = SourceKind::generator;
      c.generator = get_or<std::string>(s, "name", "");
      c.parameters = s.contains("parameters") ? s["parameters"] : json::object();
      if (!c.parameters.is_object()) throw ConfigError("config: generator parameters must be an object");
    } else {
      throw ConfigError("config: source.type must be 'matrix-files' or 'generator'");
    }
  }
  c.tasks = get_or<std::vector<std::string>>(j, "tasks", {});
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) throw ConfigError("config: tolerances must be an object");
    for (const auto& [name, value] : j["tolerances"].items()) {
      if (!value.is_number()) throw ConfigError("config: tolerance '" + name + "' must be a number");
      set_tolerance(c.tolerances, name, value.get<double>());
      c.tolerance_overrides[name] = value;
    }
  }
  if (j.contains("seed") && !j["seed"].is_null()) {
    const auto& seed = j["seed"];
    const bool non_negative = seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0);
    if (!non_negative) throw ConfigError("config: seed must be an unsigned integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("verify")) {
    c.verify_cases = get_or<int>(j["verify"], "cases", c.verify_cases);
    c.verify_max_dim = get_or<int>(j["verify"], "max_dim", c.verify_max_dim);
  }
  if (j.contains("bounds")) {
    c.bounds_trials = get_or<int>(j["bounds"], "trials", c.bounds_trials);
    c.bounds_trial_dim = get_or<int>(j["bounds"], "trial_dim", c.bounds_trial_dim);
    c.trial_subspaces = get_or<std::vector<std::vector<std::vector<double>>>>(j["bounds"], "subspaces", {});
  }
  if (j.contains("demo_residual"))
    c.residual_sizes = get_or<std::vector<int>>(j["demo_residual"], "sizes", c.residual_sizes);
  return c;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(j, std::filesystem::path(path).parent_path().string());
}

}  // namespace pencilkit::cli
