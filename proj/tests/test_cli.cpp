#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/json_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace hankel_gamma;

namespace {

struct CliRun {
  int status = -1;
  std::string out;

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Cli, DetPrintsPrintedPolynomial) {
  const CliRun r = run("det --n 2");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("text"), "-1 - x + 5x^2");
  EXPECT_EQ(poly_from_json(j.at("det")), hankel_det(kCentralFamily, 2));
  EXPECT_EQ(run("--format human det --n 2").out, "H_0(2, x) = -1 - x + 5x^2\n");
}

TEST(Cli, DetJsonRoundTripsForShiftedShapes) {
  for (const char* lambda : {"1", "2,1", "1,1,1"}) {
    const CliRun r = run(std::string("det --n 4 --lambda ") + lambda);
    ASSERT_EQ(r.status, 0) << lambda;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(poly_from_json(j.at("det")), shifted_hankel_det(kCentralFamily, 4, Partition::parse(lambda)));
  }
  EXPECT_EQ(run("det --n 3 --engine interpolation").out, run("det --n 3").out);
}

TEST(Cli, ClosedFormEval) {
  EXPECT_EQ(run("--format human closed-form eval --n 1 --x 2/1").out, "-7\n");
  const auto j = Json::parse(run("closed-form eval --n 1 --x -2").out);
  EXPECT_EQ(j.at("computed"), "5/1");
  EXPECT_EQ(j.at("special_value"), "5/1");
  const auto k = Json::parse(run("closed-form eval --n 3 --x 1/3").out);
  EXPECT_TRUE(k.at("special_value").is_null());
  EXPECT_EQ(k.at("computed"), k.at("closed_form"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("det").status, 2);
  EXPECT_EQ(run("det --n -1").status, 2);
  EXPECT_EQ(run("closed-form eval --n 1 --x 0.5").status, 2);
  EXPECT_EQ(run("zeros --n 3 --width 0").status, 2);
  EXPECT_EQ(run("--format xml det --n 1").status, 2);
  EXPECT_EQ(run("gamma-table verify --table 1 --n 2").status, 2);  // below the row floors
  EXPECT_EQ(run("det --n 1 --lambda 3,1,1").status, 2);
}

TEST(Cli, IoFailureExitsThree) {
  EXPECT_EQ(run("scan --n-max 2 --r-max 1 --out /nonexistent-dir/s.jsonl").status, 3);
}

TEST(Cli, GammaTableEmitsOneLinePerRow) {
  const CliRun r = run("gamma-table verify --table 3 --n 5");
  ASSERT_EQ(r.status, 0);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 10u);
  for (const auto& l : lines) {
    const auto j = Json::parse(l);
    EXPECT_EQ(j.at("status"), "pass");
    EXPECT_EQ(j.at("lhs"), j.at("rhs"));
    EXPECT_EQ(j.at("row_id").get<std::string>().substr(0, 3), "t3:");
  }
  const CliRun rnd = run("gamma-table verify --table 1 --n 6 --random-symbols 5");
  ASSERT_EQ(rnd.status, 0);
  EXPECT_TRUE(Json::parse(rnd.lines().front()).contains("failure_bound"));
}

TEST(Cli, IdentitiesVerify) {
  const CliRun r = run("identities verify --n-max 3");
  ASSERT_EQ(r.status, 0);
  for (const auto& l : r.lines()) {
    const auto j = Json::parse(l);
    EXPECT_TRUE(j.at("pass").get<bool>()) << l;
    EXPECT_TRUE(j.at("residual").at("coeffs").empty());
  }
}

TEST(Cli, ClosedFormVerify) {
  const CliRun r = run("closed-form verify --n-max 4 --order 8");
  ASSERT_EQ(r.status, 0);
  EXPECT_GT(r.lines().size(), 30u);
}

TEST(Cli, ZerosOneLinePerRoot) {
  const CliRun r = run("zeros --n 2 --digits 3");
  ASSERT_EQ(r.status, 0);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(Json::parse(lines[0]).at("approx"), "-0.358");
  EXPECT_EQ(Json::parse(lines[1]).at("approx"), "0.558");
  const auto j = Json::parse(lines[0]);
  EXPECT_LT(parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>()));
  EXPECT_EQ(Json::parse(run("zeros --n 5 --truncate").lines()[0]).at("approx"), "-1.367");
}

TEST(Cli, ScanAndExport) {
  const auto path = std::filesystem::temp_directory_path() / "hg_cli_scan.jsonl";
  std::filesystem::remove(path);
  const CliRun r = run("scan --n-max 10 --r-max 3 --out " + path.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out).at("records"), 44);
  const CliRun csv = run("scan export --csv --in " + path.string());
  ASSERT_EQ(csv.status, 0);
  const auto lines = csv.lines();
  ASSERT_EQ(lines.size(), 45u);
  EXPECT_EQ(lines[0], "n,r,value,patterns,ts");
  std::filesystem::remove(path);
}

TEST(Cli, CsvFormatHasHeader) {
  const auto lines = run("--format csv identities verify --n-max 0").lines();
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], "n,name,pass,residual");
}

TEST(Cli, VerifyAllQuick) {
  const CliRun r = run("verify-all --quick");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.lines().size(), 6u);
}

TEST(Cli, ThreadCapIsHonoured) {
  const std::string one = run("gamma-table verify --table 2 --n 5").out;
  setenv("HANKEL_GAMMA_THREADS", "1", 1);
  EXPECT_EQ(run("gamma-table verify --table 2 --n 5").out, one);
  unsetenv("HANKEL_GAMMA_THREADS");
}

}  // namespace
