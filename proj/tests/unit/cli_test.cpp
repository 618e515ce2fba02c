#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli/run.hpp"
#include "support.hpp"

namespace liecurv::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_config(const RunConfig& c) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

/// Runs the installed executable and returns its exit status and standard output.
Result run_binary(const std::string& args) {
  const std::string cmd = std::string(LIECURV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

TEST(Cli, ValidateBuiltin) {
  RunConfig c;
  c.task = "validate";
  c.algebra = "so3";
  const auto r = run_config(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, 5), "pass\n");
}

TEST(Cli, ValidateAlgebraFileReportsFailure) {
  RunConfig c;
  c.task = "validate";
  c.spec_file = write_temp("bad.cfg", "[algebra]\ndim = 3\nstructure = 1 2 3 1\ngram = diag: 1 -1 1\n");
  const auto r = run_config(c);
  EXPECT_EQ(r.code, kValidationFailure);
  EXPECT_NE(r.out.find("gram positive definite"), std::string::npos);
}

TEST(Cli, ScanIsByteIdenticalAcrossRunsAndThreads) {
  RunConfig c;
  c.task = "scan";
  c.semidirect = "conjugation:so3";
  c.seed = 7;
  c.count = 100;
  const auto a = run_config(c);
  const auto b = run_config(c);
  c.threads = 4;
  const auto threaded = run_config(c);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, threaded.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 101);
}

TEST(Cli, ScanRequiresSeedAndOneTarget) {
  RunConfig c;
  c.task = "scan";
  c.algebra = "so3";
  EXPECT_EQ(run_config(c).code, kConfigError);
  c.seed = 1;
  c.semidirect = "euclidean";
  EXPECT_EQ(run_config(c).code, kConfigError);
  c.semidirect.clear();
  c.count = 0;
  const auto r = run_config(c);
  EXPECT_EQ(r.code, kOk);
}

TEST(Cli, DegeneratePlaneExitsWithValidationFailure) {
  RunConfig c;
  c.task = "curvature";
  c.semidirect = "magnetic:so3";
  c.plane_file = write_temp("degenerate.cfg", "[plane]\nx = 1 0 0 0 0 0\ny = 2 0 0 0 0 0\n");
  const auto r = run_config(c);
  EXPECT_EQ(r.code, kValidationFailure);
  EXPECT_NE(r.err.find("DegeneratePlane"), std::string::npos);
}

TEST(Cli, CurvatureFromPlaneFile) {
  RunConfig c;
  c.task = "curvature";
  c.semidirect = "conjugation:so3";
  c.plane_file = write_temp("planes.cfg", "[plane]\nx = 1 0 0 1 0 0\ny = 0 1 0 0 1 0\n");
  const auto r = run_config(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\n0,0.5,4,0.125,+"), std::string::npos) << r.out;
}

TEST(Cli, GeodesicOutput) {
  RunConfig c;
  c.task = "geodesic";
  c.algebra = "so3:1,2,3";
  c.initial = "1 1 1";
  EXPECT_EQ(run_config(c).code, kConfigError);
  c.integrator.dt = 0.01;
  c.integrator.steps = 10;
  c.dt_set = c.steps_set = true;
  const auto r = run_config(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,u1,u2,u3,energy");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);

  c.algebra.clear();
  c.semidirect = "euclidean";
  c.initial = "1 0 0; 0 1 0";
  const auto sd = run_config(c);
  ASSERT_EQ(sd.code, kOk);
  EXPECT_EQ(sd.out.substr(0, sd.out.find('\n')), "t,u1,u2,u3,alpha1,alpha2,alpha3,energy");
}

TEST(Cli, MidpointDivergenceIsNumericalFailure) {
  RunConfig c;
  c.task = "geodesic";
  c.algebra = "so3:1,2,3";
  c.initial = "5 5 5";
  c.integrator = {10.0, 3, Scheme::ImplicitMidpoint, 1e-12, 2};
  c.dt_set = c.steps_set = true;
  EXPECT_EQ(run_config(c).code, kNumericalFailure);
}

TEST(Cli, TorusGeodesicIsLabelledExperimental) {
  RunConfig c;
  c.task = "geodesic";
  c.semidirect = "torus:passive";
  c.initial = write_temp("state.cfg", "[state]\nu = sin 0 1 1 1\nalpha = cos 1 0 1 0\n");
  c.integrator.dt = 0.01;
  c.integrator.steps = 5;
  c.dt_set = c.steps_set = true;
  c.support_cap = 4;
  const auto r = run_config(c);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("experimental"), std::string::npos);
  EXPECT_NE(r.err.find("experimental"), std::string::npos);
}

TEST(Cli, PassiveScalarScanIsFlatOnPlanesContainingScalars) {
  RunConfig c;
  c.task = "scan";
  c.semidirect = "torus:passive";
  c.family = PlaneFamily::ContainsH;
  c.seed = 3;
  c.count = 10;
  c.sample_band = 1;
  const auto r = run_config(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("negative 0 zero 10 positive 0"), std::string::npos) << r.err;
}

TEST(Cli, ConfigFileIsApplied) {
  RunConfig c;
  apply_config_file(c, write_temp("run.cfg", "[run]\ntask = scan\nalgebra = so3:1,2,3\nseed = 9\ncount = 4\nformat = jsonl\n"));
  EXPECT_EQ(c.count, 4U);
  EXPECT_EQ(c.format, OutputFormat::Jsonl);
  const auto r = run_config(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_THROW(apply_config_file(c, write_temp("bad_run.cfg", "[run]\ncolour = red\n")), ConfigError);
}

TEST(Cli, ExecutableExitCodes) {
  EXPECT_EQ(run_binary("validate --algebra so3").code, 0);
  EXPECT_EQ(run_binary("validate --algebra nope").code, 3);
  EXPECT_EQ(run_binary("scan --algebra so3 --count 2").code, 3);
  EXPECT_EQ(run_binary("--bogus").code, 3);
  const auto a = run_binary("scan --semidirect conjugation:so3 --seed 7 --count 100");
  const auto b = run_binary("scan --semidirect conjugation:so3 --seed 7 --count 100 --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace liecurv::cli
