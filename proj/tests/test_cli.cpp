#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "borwein/cli.hpp"
#include "borwein/errors.hpp"
#include "borwein/json_io.hpp"

namespace fs = std::filesystem;
using borwein::Json;
using namespace borwein::cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Skips "# ..." header lines, if any.
Json body_json(const std::string& text) {
  std::istringstream in(text);
  std::string line, rest;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) rest += line + "\n";
  return Json::parse(rest);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("borwein_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Range, Parse) {
  EXPECT_EQ(parse_range("7").values(), (std::vector<std::int64_t>{7}));
  EXPECT_EQ(parse_range("2..4").values(), (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_THROW(parse_range("4..2"), borwein::BadParameters);
  EXPECT_THROW(parse_range("x"), borwein::BadParameters);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run_cli({"--help"}).code, kPass);
  const auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, kPass);
  EXPECT_EQ(v.out, std::string(kToolVersion) + "\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"expand", "--conj", "7"}).code, kUsage);
  EXPECT_EQ(run_cli({"expand", "--conj", "1", "--m", "-1", "--n", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"expand", "--conj", "iks", "--a", "2", "--K", "4", "--n", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "--identity", "theorem", "--m", "1", "--n", "1", "--mode", "modular",
                     "--prime", "4611686018427387761"})
                .code,
            kUsage);
}

TEST(Cli, ExpandJson) {
  const auto r = run_cli({"expand", "--conj", "1", "--m", "0", "--n", "1", "--kmax", "0"});
  ASSERT_EQ(r.code, kPass);
  const auto j = body_json(r.out);
  EXPECT_EQ(j.at("provenance").at("tool"), kToolName);
  EXPECT_EQ(j.at("provenance").at("config").at("kmax"), "0");
  const auto s = borwein::series_from_json(j.at("series"));
  EXPECT_EQ(s.slice(0), borwein::parse_laurent("1 - q - q^2 + q^3", borwein::VarSet{borwein::Var::q}));

  const auto e = run_cli({"expand", "--conj", "1", "--m", "1", "--n", "2", "--kmax", "4"});
  ASSERT_EQ(e.code, kPass);
  EXPECT_EQ(borwein::series_from_json(body_json(e.out).at("series")).kmax(), 4);
  EXPECT_EQ(run_cli({"expand", "--conj", "3", "--m1", "0", "--m2", "0", "--n1", "3", "--K", "5"}).code, kPass);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", "--conj", "1", "--m", "1", "--n", "2", "--k", "5"}).code, kPass);
  EXPECT_EQ(run_cli({"check", "--conj", "1", "--m", "1", "--n", "1", "--k", "5"}).code, kViolation);
  EXPECT_EQ(run_cli({"check", "--conj", "1", "--m", "0", "--n", "0..15"}).code, kPass);
  for (const char* a : {"1", "5"})
    EXPECT_EQ(run_cli({"check", "--conj", "iks", "--a", a, "--K", "12", "--n", "1..6"}).code, kPass);
  EXPECT_EQ(run_cli({"check", "--conj", "iks", "--a", "1..5", "--K", "12", "--n", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", "--conj", "2", "--m1", "1", "--m2", "1", "--n1", "1", "--n2", "40", "--n3", "0",
                     "--k", "40"})
                .code,
            kViolation);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli({"verify", "--identity", "andrews", "--n-max", "20", "--mode", "exact"}).code, kPass);
  EXPECT_EQ(run_cli({"verify", "--identity", "theorem", "--m", "1", "--n", "3", "--mode", "exact"}).code, kPass);
  EXPECT_EQ(run_cli({"verify", "--identity", "theorem", "--m", "3", "--n", "8", "--mode", "modular", "--trials",
                     "20"})
                .code,
            kPass);
  const auto bad = run_cli({"verify", "--identity", "kaneko", "--nvars", "2", "--n", "2", "--mode", "modular",
                            "--perturb", "1", "--format", "json"});
  EXPECT_EQ(bad.code, kViolation);
  EXPECT_EQ(body_json(bad.out).at("reports").at(0).at("status"), "fail");
}

TEST(Cli, PrimeFromEnvironment) {
  ::setenv("BORWEIN_LAB_PRIME", "1000003", 1);
  const int code =
      run_cli({"verify", "--identity", "kaneko", "--nvars", "2", "--n", "1", "--mode", "modular"}).code;
  ::unsetenv("BORWEIN_LAB_PRIME");
  EXPECT_EQ(code, kUsage);
}

TEST(Cli, Counterexamples) {
  const auto r = run_cli({"counterexamples", "--format", "json"});
  EXPECT_EQ(r.code, kPass);
  const auto j = body_json(r.out);
  EXPECT_EQ(j.at("report").at("pattern").at("stable_coeff"), "1");
  EXPECT_TRUE(j.at("report").at("refinement").at("reproduced").get<bool>());
  EXPECT_TRUE(j.at("report").at("control").at("clean").get<bool>());
}

TEST(Cli, JobsDoNotChangeOutput) {
  const std::vector<std::vector<std::string>> cmds{
      {"table1", "--m", "1..2", "--k", "0..8", "--ceiling", "12"},
      {"check", "--conj", "3", "--m1", "2..3", "--m2", "2", "--n", "1..3", "--K", "2", "--k", "0..6"},
      {"verify", "--identity", "theorem", "--m", "1", "--n", "1..3", "--mode", "exact"}};
  for (auto args : cmds) {
    for (const char* fmt : {"json", "csv", "text"}) {
      auto a = args, b = args;
      a.insert(a.end(), {"--format", fmt, "--jobs", "1"});
      b.insert(b.end(), {"--format", fmt, "--jobs", "2"});
      const auto x = run_cli(a), y = run_cli(b);
      EXPECT_EQ(x.code, y.code);
      EXPECT_EQ(x.out, y.out) << args[0] << " " << fmt;
    }
  }
}

TEST(Cli, Table1CheckpointResume) {
  const auto out = scratch("table.csv");
  const auto cells = fs::path(out.string() + ".cells");
  fs::remove_all(cells);
  const std::vector<std::string> args{"table1", "--m", "1..2", "--k", "0..7", "--format", "csv", "--out", out.string()};
  ASSERT_EQ(run_cli(args).code, kPass);
  const auto first = slurp(out);
  EXPECT_NE(first.find("\n1,0,0,0,0,0,2,2,2\n"), std::string::npos);
  EXPECT_NE(first.find("\n2,0,0,0,5,5,8,8,11\n"), std::string::npos);
  ASSERT_TRUE(fs::exists(cells));
  EXPECT_FALSE(fs::is_empty(cells));
  fs::remove(out);
  ASSERT_EQ(run_cli(args).code, kPass);
  EXPECT_EQ(slurp(out), first);
  fs::remove_all(out.parent_path());
}
