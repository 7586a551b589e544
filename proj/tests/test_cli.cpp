#include "gridcc/cli.hpp"

#include <cstdio>
#include <filesystem>

#include "gtest/gtest.h"

namespace gridcc {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gridcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliColor, Examples) {
  auto r = run({"color", "--coloring", "lambda", "--p", "4", "--region", "1,1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"B(0,1)\""), std::string::npos) << r.out;
  r = run({"color", "--coloring", "mu", "--p", "4", "--region", "0,0,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(0,4,0)"), std::string::npos) << r.out;
  r = run({"color", "--coloring", "theta", "--p", "3", "--region", "2,3,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(1,3)"), std::string::npos) << r.out;
}

TEST(CliColor, FormatsAndErrors) {
  auto r = run({"color", "--coloring", "mu", "--p", "2", "--region", "0,0,2,3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 6U);
  r = run({"color", "--coloring", "mu", "--p", "2", "--region", "0,0,2,3", "--format", "csv"});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  EXPECT_EQ(run({"color", "--coloring", "beta"}).code, 2);
  EXPECT_EQ(run({"color", "--coloring", "mu", "--region", "0,0,0,3"}).code, 2);
  EXPECT_EQ(run({"color", "--coloring", "mu", "--region", "a,b,c,d"}).code, 2);
  EXPECT_EQ(run({"color", "--coloring", "mu", "--region", "-1,0,2,2"}).code, 2);
}

TEST(CliVerify, Examples) {
  auto r = run({"verify", "--p", "2", "--mode", "exhaustive"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mode: exhaustive"), std::string::npos);
  EXPECT_NE(r.out.find("violator: none"), std::string::npos);
  EXPECT_EQ(run({"verify", "--p", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "2", "--mode", "full"}).code, 2);
  r = run({"verify", "--p", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto report = report_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(report.mode, VerifyMode::exhaustive);
  EXPECT_EQ(report.p, 2);
  EXPECT_FALSE(report.violator.has_value());
  r = run({"verify", "--p", "4", "--mode", "random", "--trials", "2000", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("trials: 2000"), std::string::npos) << r.out;
  r = run({"verify", "--p", "4", "--mode", "partial", "--max-colors", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mode: partial"), std::string::npos);
}

TEST(CliCount, Examples) {
  auto r = run({"count", "--coloring", "mu", "--p", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("palette: 110\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bound: 128\n"), std::string::npos) << r.out;
  r = run({"count", "--coloring", "mu", "--p", "2"});
  EXPECT_NE(r.out.find("palette: 49\n"), std::string::npos) << r.out;
  r = run({"count", "--coloring", "lambda", "--p", "4"});
  EXPECT_NE(r.out.find("palette: 500\n"), std::string::npos) << r.out;
  r = run({"count", "--coloring", "lambda", "--p", "3"});
  EXPECT_NE(r.out.find("general bound: 852\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"count", "--coloring", "mu"}).code, 2);
}

TEST(CliRender, Examples) {
  auto r = run({"render", "--figure", "1", "--p", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
  EXPECT_NE(r.out.find("0_4^0"), std::string::npos);
  r = run({"render", "--figure", "3", "--p", "4", "--format", "vector"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0U);
  EXPECT_EQ(run({"render", "--figure", "4", "--b", "7"}).code, 2);
  EXPECT_EQ(run({"render", "--figure", "6"}).code, 2);
  EXPECT_EQ(run({"render", "--figure", "1", "--region", "0,0,2000,2000"}).code, 2);

  const auto path = std::filesystem::temp_directory_path() / "gridcc_render_test.ppm";
  r = run({"render", "--figure", "2", "--format", "pixmap", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path, std::ios::binary);
  std::string magic;
  in >> magic;
  EXPECT_EQ(magic, "P6");
  std::filesystem::remove(path);
}

TEST(CliOracle, Examples) {
  auto r = run({"oracle", "--width", "4", "--height", "4", "--coloring", "random:3", "--p", "2", "--instances", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agree: 200/200"), std::string::npos) << r.out;
  r = run({"oracle", "--width", "2", "--height", "1", "--coloring", "random:1", "--p", "1", "--instances", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violators: oracle 5, verifier 5"), std::string::npos) << r.out;
  EXPECT_EQ(run({"oracle", "--width", "6", "--height", "6"}).code, 2);
  r = run({"oracle", "--width", "3", "--height", "3", "--coloring", "lambda", "--p", "2", "--instances", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violators: oracle 0, verifier 0"), std::string::npos) << r.out;
  EXPECT_EQ(run({"oracle", "--coloring", "random:x"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--coloring", "mu", "--p", "4", "--bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace gridcc
