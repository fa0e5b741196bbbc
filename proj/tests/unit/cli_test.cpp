#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pencilkit/cli/config.hpp"
#include "pencilkit/cli/matrix_market.hpp"
#include "pencilkit/cli/runner.hpp"
#include "test_support.hpp"

using namespace pencilkit;
using namespace pencilkit::cli;
namespace fs = std::filesystem;

namespace {

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) / (std::string("pencilkit_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PENCILKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

ProblemConfig diag_example(const std::vector<std::string>& tasks) {
  return parse_config(nlohmann::json{
      {"source", {{"type", "generator"}, {"name", "diag-example"}, {"parameters", {{"A", {2, 3}}, {"B", {1, -1}}}}}},
      {"tasks", tasks}});
}

}  // namespace

using MatrixMarket = Scratch;

TEST_F(MatrixMarket, ArrayIdentity) {
  const std::string f = write("i.mtx", "%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n");
  EXPECT_EQ(ingest_matrix(f).matrix(), Matrix::Identity(2, 2));
}

TEST_F(MatrixMarket, CoordinateDiagonal) {
  const std::string f = write("d.mtx",
                              "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 2.0\n2 2 3.0\n");
  EXPECT_EQ(ingest_matrix(f).matrix(), pktest::diag({2, 3}).matrix());
}

TEST_F(MatrixMarket, SymmetricStorageIsMirrored) {
  const std::string f = write("s.mtx", "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 1\n2 1 5\n");
  const Matrix m = read_matrix_market(f);
  EXPECT_EQ(m(0, 1), 5.0);
  EXPECT_EQ(m(1, 0), 5.0);
}

TEST_F(MatrixMarket, RectangularIsNotSquare) {
  const std::string f = write("r.mtx", "%%MatrixMarket matrix array real general\n2 3\n1\n2\n3\n4\n5\n6\n");
  EXPECT_EQ(read_matrix_market(f).cols(), 3);
  EXPECT_THROW(ingest_matrix(f), NotSquare);
}

TEST_F(MatrixMarket, ParseErrorCarriesLine) {
  const std::string f = write("bad.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 2.0\n2 2 x\n");
  try {
    read_matrix_market(f);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST_F(MatrixMarket, ComplexIsRejected) {
  const std::string f = write("c.mtx", "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
  EXPECT_THROW(read_matrix_market(f), NotReal);
}

TEST_F(MatrixMarket, WriteReadRoundTrip) {
  Matrix m(3, 3);
  m << 1.0 / 3, 2e-300, -7, 2e-300, std::acos(-1.0), 0.1, -7, 0.1, 1e300;
  const SymMatrix s(m);
  for (MmFormat fmt : {MmFormat::array, MmFormat::coordinate}) {
    const std::string f = path("rt.mtx");
    write_matrix_market(f, s, fmt);
    EXPECT_EQ(ingest_matrix(f).matrix(), s.matrix());
  }
}

TEST(Config, Defaults) {
  const ProblemConfig c = diag_example({"solve"});
  EXPECT_EQ(c.source, SourceKind::generator);
  EXPECT_EQ(c.verify_cases, 200);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(diag_example({"nonsense"}).validate(), ConfigError);
  EXPECT_THROW(diag_example({}).validate(), ConfigError);
  ProblemConfig c = diag_example({"solve"});
  EXPECT_THROW(set_tolerance(c.tolerances, "zero", -1.0), ConfigError);
  EXPECT_THROW(set_tolerance(c.tolerances, "bogus", 1.0), ConfigError);
  set_tolerance(c.tolerances, "zero", 1e-6);
  EXPECT_EQ(c.tolerances.zero, 1e-6);
  EXPECT_EQ(tolerances_to_json(c.tolerances)["zero"], 1e-6);
}

TEST(Runner, SolveDiagExample) {
  const RunOutcome out = run(diag_example({"solve"}));
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto& eig = out.report["tasks"][0]["result"]["eigenvalues"];
  ASSERT_EQ(eig.size(), 2u);
  std::map<double, std::string> types;
  for (const auto& e : eig) {
    types[e["value"]["re"].get<double>()] = e["sign_type"].get<std::string>();
    EXPECT_TRUE(e.contains("residual"));
  }
  EXPECT_EQ(types.at(2.0), "positive");
  EXPECT_EQ(types.at(-3.0), "negative");
  EXPECT_EQ(out.report["status"], "ok");
  EXPECT_TRUE(out.report.contains("tolerances"));
}

TEST(Runner, DemoResidual) {
  ProblemConfig c = parse_config(nlohmann::json{
      {"source", {{"type", "generator"}, {"name", "green-kernel"}, {"parameters", {{"n", 32}}}}},
      {"tasks", {"demo-residual"}},
      {"demo_residual", {{"sizes", {16, 32}}}}});
  const RunOutcome out = run(c);
  const auto& rows = out.report["tasks"][0]["result"]["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(rows[1]["weighted"].get<double>(), 0.0);
  EXPECT_LT(rows[1]["control"].get<double>(), rows[0]["control"].get<double>());
}

TEST(Runner, VerifySeed42) {
  ProblemConfig c = parse_config(nlohmann::json{{"tasks", {"verify"}}, {"seed", 42}, {"verify", {{"cases", 200}, {"max_dim", 6}}}});
  const RunOutcome out = run(c);
  EXPECT_EQ(out.exit_code, kExitOk) << out.report["tasks"][0]["result"]["failures"].dump();
  EXPECT_TRUE(out.report["tasks"][0]["verdict"].get<bool>());
  const auto& corr = out.report["tasks"][0]["result"]["properties"]["correspondence"];
  EXPECT_EQ(corr["checked"], corr["passed"]);
}

TEST(Runner, ReportIsDeterministic) {
  ProblemConfig c = parse_config(nlohmann::json{{"tasks", {"verify"}}, {"seed", 7}, {"verify", {{"cases", 30}, {"max_dim", 5}}}});
  EXPECT_EQ(run(c).report.dump(), run(c).report.dump());
}

TEST(Runner, MissingFileIsInputError) {
  ProblemConfig c = parse_config(nlohmann::json{
      {"source", {{"type", "matrix-files"}, {"A", "/nonexistent/a.mtx"}, {"B", "/nonexistent/b.mtx"}}}, {"tasks", {"solve"}}});
  const RunOutcome out = run(c);
  EXPECT_EQ(out.exit_code, kExitInputError);
  EXPECT_EQ(out.report["status"], "input-error");
}

TEST(Runner, TaskErrorExitsOne) {
  ProblemConfig c = parse_config(nlohmann::json{
      {"source", {{"type", "generator"}, {"name", "diag-example"}, {"parameters", {{"A", {1, 2}}, {"B", {1, 0}}}}}},
      {"tasks", {"reduce", "solve"}}});
  const RunOutcome out = run(c);
  EXPECT_EQ(out.exit_code, kExitFailure);
  EXPECT_EQ(out.report["tasks"][0]["status"], "error");
  EXPECT_EQ(out.report["tasks"][1]["status"], "ok");
}

TEST(Runner, PrettyRenderingMentionsTasks) {
  const std::string text = render_pretty(run(diag_example({"solve", "reduce"})).report);
  EXPECT_NE(text.find("solve"), std::string::npos);
  EXPECT_NE(text.find("reduce"), std::string::npos);
}

using Cli = Scratch;

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("solve --generator diag-example --param A=[2,3] --param B=[1,-1]"), 0);
  EXPECT_EQ(run_cli("solve --A " + path("missing.mtx") + " --B " + path("missing.mtx")), 2);
  EXPECT_EQ(run_cli("solve --no-such-flag"), 2);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("reduce --generator diag-example --param A=[1,2] --param B=[1,0]"), 1);
}

TEST_F(Cli, FilesAndOutput) {
  const std::string a = write("a.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 2.0\n2 2 3.0\n");
  const std::string b = write("b.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n2 2 -1.0\n");
  ASSERT_EQ(run_cli("solve --A " + a + " --B " + b + " --out " + path("r.json")), 0);
  const auto report = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(report["tasks"][0]["result"]["eigenvalues"].size(), 2u);
  ASSERT_EQ(run_cli("solve --A " + a + " --B " + b + " --pretty --out " + path("r.txt")), 0);
  EXPECT_NE(slurp(path("r.txt")).find("positive"), std::string::npos);
}

TEST_F(Cli, ConfigFileRun) {
  const std::string cfg = write("c.json", R"({"source": {"type": "generator", "name": "invariant-kernel",
    "parameters": {"n": 5, "k": 1, "seed": 3}}, "tasks": ["solve", "relation"]})");
  EXPECT_EQ(run_cli("run --config " + cfg + " --out " + path("r.json")), 0);
  const auto report = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(report["tasks"].size(), 2u);
  EXPECT_EQ(run_cli("run"), 2);
}

TEST_F(Cli, VerifyIsBitIdentical) {
  ASSERT_EQ(run_cli("verify --seed 42 --cases 40 --max-dim 6 --out " + path("a.json")), 0);
  ASSERT_EQ(run_cli("verify --seed 42 --cases 40 --max-dim 6 --out " + path("b.json")), 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, ExportWritesMatrixMarket) {
  ASSERT_EQ(run_cli("export --generator green-kernel --n 8 --out " + path("g")), 0);
  EXPECT_EQ(ingest_matrix(path("g_A.mtx")).dim(), 8);
  EXPECT_EQ(inertia(ingest_matrix(path("g_B.mtx"))), (Inertia{4, 0, 4}));
}
