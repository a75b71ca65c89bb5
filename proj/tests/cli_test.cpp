// Drives the tikreg binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(TIKREG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double field(const std::string& report, const std::string& key) {
  std::istringstream is(report);
  std::string line;
  while (std::getline(is, line))
    if (line.rfind(key, 0) == 0) return std::stod(line.substr(key.size()));
  ADD_FAILURE() << "missing " << key << " in\n" << report;
  return NAN;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

const std::string kScalar = "--problem diagonal --n 1 --p 1 --delta 0.05 --policy axis --C 1.5 --b 0.5";

}  // namespace

TEST(Cli, SolveScalarExact) {
  const auto r = run("solve " + kScalar + " --solver exact");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NEAR(field(r.out, "epsilon"), 1.0 / 13.0, 1e-6);
  EXPECT_NEAR(field(r.out, "h"), 0.075, 1e-7);
  EXPECT_NEAR(field(r.out, "||u_delta - y||"), 0.025, 1e-6);
}

TEST(Cli, SolveScalarCgMatchesExact) {
  const auto exact = run("solve " + kScalar + " --solver exact");
  const auto cg = run("solve " + kScalar + " --solver cg");
  ASSERT_EQ(cg.code, 0) << cg.out;
  EXPECT_NEAR(field(cg.out, "epsilon"), field(exact.out, "epsilon"), 1e-6 / 13.0);
  EXPECT_NEAR(field(cg.out, "||u_delta||"), field(exact.out, "||u_delta||"), 1e-6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --problem diagonal --n 1 --delta 100 --policy axis").code, 2);
  EXPECT_EQ(run("solve --problem diagonal --n 1 --delta 0.05 --C 1.2 --b 0.5").code, 64);
  EXPECT_EQ(run("solve --problem diagonal --delta").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("sweep --delta-list 0.1 --out /nonexistent-dir/out.csv").code, 66);

  const auto unknown = run("gallery --problem nope");
  EXPECT_EQ(unknown.code, 64);
  EXPECT_NE(unknown.out.find("diagonal"), std::string::npos);
  EXPECT_NE(unknown.out.find("hilbert"), std::string::npos);
  EXPECT_NE(unknown.out.find("blur"), std::string::npos);
}

TEST(Cli, Gallery) {
  const auto all = run("gallery");
  ASSERT_EQ(all.code, 0);
  for (const char* name : {"diagonal", "hilbert", "blur"})
    EXPECT_NE(all.out.find(name), std::string::npos) << name;

  const auto hilbert = run("gallery --n 10 --problem hilbert");
  ASSERT_EQ(hilbert.code, 0);
  std::istringstream is(hilbert.out);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  EXPECT_EQ(row.rfind("hilbert", 0), 0u);
  const double cond = std::stod(row.substr(row.find_last_of(' ') + 1));
  EXPECT_GT(cond, 1e12);
}

TEST(Cli, SweepCsvIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "tikreg_cli_sweep_a.csv";
  const auto b = dir / "tikreg_cli_sweep_b.csv";
  const std::string args =
      "sweep --problem hilbert --n 8 --delta-list 1e-1,1e-2,1e-3 --trials 1 --solver cg --seed 3";
  ASSERT_EQ(run(args + " --out " + a.string()).code, 0);
  ASSERT_EQ(run(args + " --out " + b.string()).code, 0);
  const auto first = slurp(a);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(b));
  EXPECT_EQ(first.rfind("delta,trial,epsilon,h,err,u_norm,y_norm,gap_budget,iters,mode,status,wall_ms\n", 0), 0u);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, SweepToStdout) {
  const auto r = run("sweep --problem diagonal --n 10 --delta-list 1e-1,1e-2 --trials 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("median_err"), std::string::npos);
  EXPECT_NE(r.out.find(",exact,ok,"), std::string::npos);
}
