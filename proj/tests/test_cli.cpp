#include <gtest/gtest.h>

#ifdef SRPT_HAVE_CLI

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "srpt_cli/cli.hpp"
#include "support.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "srpt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = srpt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

using srpt::test::spec_path;

TEST(Cli, HelpListsSchema) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
  EXPECT_NE(r.out.find("topology"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"derive", spec_path("fig3"), "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"check", "assumption-a", spec_path("fig5c_mild")}).code, 2);
}

TEST(Cli, LibraryErrorsExitOne) {
  const Result r = run({"meanfield", spec_path("fig3")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("TopologyMismatch (20)"), std::string::npos);
}

TEST(Cli, DeriveAppliesStandardShift) {
  const Result r = run({"derive", spec_path("fig2_abstract"), "--shift", "standard"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("blackbox").at("arguments"), nlohmann::json({"psi", "rho - q"}));
  EXPECT_EQ(r.json().at("shift"), "standard");
}

TEST(Cli, ClassifyVerdict) {
  const Result r = run({"classify", spec_path("fig5c_below"), "--no-critical-temperature"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("classification"), "NotConfirmed");
  EXPECT_EQ(r.json().at("decoupling").at("feasible"), false);
}

TEST(Cli, MeanfieldCsvAndJson) {
  const Result j = run({"meanfield", spec_path("fig5c_above"), "--json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(j.json().dump().find("Superradiant") != std::string::npos, true);
  const Result c = run({"meanfield", spec_path("fig5c_above"), "--format", "csv"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find(','), std::string::npos);
}

TEST(Cli, SweepWritesCsvFile) {
  const std::string path = ::testing::TempDir() + "sweep.csv";
  const Result r = run({"sweep", spec_path("fig5c_above"), "--ratio-range", "0.5:2:4", "--threads", "1",
                        "--format", "csv", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "index,ratio,l_r_H,temperature_K,phi0_Wb,psi0_Wb,phase,tc_lower_K,tc_upper_K,error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
  std::remove(path.c_str());
}

TEST(Cli, SweepIsReproducible) {
  const std::vector<std::string> args = {"sweep", spec_path("fig5c_above"), "--ratio", "0.7,1.4",
                                         "--threads", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, EdReportsParityAndZeroFlux) {
  const Result r = run({"ed", spec_path("fig5c_mild"), "--photon-cutoff", "12", "--cell-cutoff", "8",
                        "--ladder", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = r.json().at("result");
  EXPECT_EQ(res.at("parity_symmetric"), true);
  EXPECT_EQ(res.at("phi_mean_Wb"), 0.0);
  EXPECT_EQ(res.at("dimension"), 96);
}

TEST(Cli, CheckHeppPasses) {
  const Result r = run({"check", "hepp", spec_path("fig5c_mild"), "--temperature", "0.2",
                        "--photon-cutoff", "20", "--cell-cutoff", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("passed"), true);
}

TEST(Cli, CheckAssumptionAForTline) {
  const Result r = run({"check", "assumption-a", spec_path("fig4")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("justified"), std::string::npos);
}

TEST(Cli, CheckUnitaryShortLadder) {
  const Result r = run({"check", "unitary", spec_path("fig2_mild"), "--ladder", "12:6,24:12",
                        "--tolerance", "1e-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("report").at("passed"), true);
}

#endif
