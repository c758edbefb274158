#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(WEYLCOH_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("group --type X9").status, 2);
  EXPECT_EQ(run("count --n 6 --cycle-type 2,2 --q 2").status, 2);
  EXPECT_EQ(run("poset --type A2 --kind affine").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, CountPrintsOrbits) {
  CliRun r = run("count --n 6 --cycle-type 2,2,1,1 --q 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0\n");
  // q^2 - 5q + 6 at q = 4
  EXPECT_EQ(run("count --n 5 --cycle-type 1,1,1,1,1 --q 4").out, "2\n");
}

TEST(Cli, InterpolatesAFivePointCount) {
  CliRun r = run("--q-samples 2,3,4,5 interp --n 5 --cycle-type 1,1,1,1,1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("q^2 - 5q + 6"), std::string::npos) << r.out;
}

TEST(Cli, ToricE6PosetTotals) {
  CliRun r = run("poset --type E6 --kind toric");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("total 5119"), std::string::npos);
  EXPECT_NE(r.out.find("inversion orbits 5079"), std::string::npos);
}

TEST(Cli, OutputIndependentOfThreadCount) {
  for (std::string cmd : {"poincare --type D4 --kind toric --twist minus_identity", "count --n 6 --cycle-type 3,3 --q 3",
                          "moduli --id D3_tp"}) {
    CliRun a = run("--threads 1 " + cmd), b = run("--threads 3 " + cmd);
    EXPECT_EQ(a.status, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, CsvOutputHasLabelHeader) {
  CliRun r = run("--format csv chartab --type S5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "irrep,c0,c1,c2,c3,c4,c5,c6");
  CliRun m = run("--format csv moduli --id D3_tp");
  EXPECT_EQ(m.out.rfind("degree,phi_{1}^{0},", 0), 0u) << m.out;
}

TEST(Cli, CacheDirectoryIsUsedOnSecondRun) {
  fs::path dir = fs::temp_directory_path() / ("weylcoh-cli-" + std::to_string(std::random_device{}()));
  CliRun a = run("--cache-dir " + dir.string() + " poset --type D4 --kind toric");
  EXPECT_FALSE(fs::is_empty(dir));
  CliRun b = run("--cache-dir " + dir.string() + " poset --type D4 --kind toric");
  EXPECT_EQ(a.out, b.out);
  fs::remove_all(dir);
}
