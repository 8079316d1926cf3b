#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "framekit/errors.hpp"
#include "framekit/run_config.hpp"
#include "framekit/runner.hpp"
#include "framekit/spectral.hpp"
#include "json.hpp"

using namespace framekit;
using nlohmann::json;

namespace {

std::string config_error_message(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string json_without_timestamp(const std::string& report) {
  json j = json::parse(report);
  j.erase("generated_at");
  return j.dump();
}

}  // namespace

TEST_CASE("parse_config: defaults on a minimal document") {
  const RunConfig cfg =
      parse_config(R"({"space": "hardy", "points": [[0.1, 0.0], [0.2, 0.0]]})");
  CHECK(cfg.space == SpaceKind::Hardy);
  CHECK(cfg.points.size() == 2);
  CHECK(cfg.tau == 0.5);
  CHECK(cfg.section_sizes == std::vector<std::size_t>{10, 20, 40});
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.seed == 12345);
  CHECK_FALSE(cfg.cnp_requested);
}

TEST_CASE("parse_config: validation errors carry the field path") {
  CHECK(config_error_message(R"({"space": "hardy", "points": [[1.2, 0.0], [0.1, 0.0]]})")
            .find("points[0]") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": "hardy", "points": [[0.1,0],[0.2,0]], "analysis": {"tau": 0}})")
            .find("analysis.tau") != std::string::npos);
  CHECK(config_error_message(R"({"space": "banach", "points": [[0.1,0],[0.2,0]]})")
            .find("space.type") != std::string::npos);
  CHECK(config_error_message(R"({"space": "hardy")") .find("invalid JSON") !=
        std::string::npos);
  CHECK(config_error_message(
            R"({"space": {"type":"explicit_vectors","vectors":[[[1,0]],[[0,0]]]}})")
            .find("space.vectors[1]") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": {"type":"dirichlet_mu","masses":[{"zeta":[0.5,0],"c":1}]},
                "points": [[0.1,0],[0.2,0]]})")
            .find("space.masses[0].zeta") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": {"type":"dirichlet_mu","masses":[{"zeta":[1,0],"c":-2}]},
                "points": [[0.1,0],[0.2,0]]})")
            .find("space.masses[0].c") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": {"type":"tridiag_example"}, "cnp": {"omega0": [0,0]}})")
            .find("cnp") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": {"type":"tridiag_example"}, "points": [[0.1,0]]})")
            .find("points") != std::string::npos);
  CHECK(config_error_message(
            R"({"space": "hardy",
                "points": [[0.1,0],[0.2,0]],
                "analysis": {"section_sizes": [10, 10]}})")
            .find("section_sizes") != std::string::npos);
}

TEST_CASE("generate_points: radial exponential") {
  const std::vector<Complex> pts =
      generate_points(RadialExponentialSpec{0.5, 0.0, 3});
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Complex(0.5, 0.0));
  CHECK(pts[1] == Complex(0.75, 0.0));
  CHECK(pts[2] == Complex(0.875, 0.0));

  const std::vector<Complex> flipped =
      generate_points(RadialExponentialSpec{0.5, std::numbers::pi, 3});
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(flipped[k].real() + pts[k].real()) < 1e-12);
    CHECK(std::abs(flipped[k].imag()) < 1e-15);
  }

  CHECK_THROWS_AS(generate_points(RadialExponentialSpec{0.5, 0.0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_points(RadialExponentialSpec{1.0, 0.0, 3}),
                  std::invalid_argument);
  CHECK(config_error_message(
            R"({"space":"hardy","points":{"type":"radial_exponential","q":0.5,"theta":0,"count":0}})")
            .find("points.count") != std::string::npos);
  // the boundary guard caps the reachable count
  CHECK(config_error_message(
            R"({"space":"hardy","points":{"type":"radial_exponential","q":0.5,"theta":0,"count":31}})")
            .find("points.count") != std::string::npos);
}

TEST_CASE("generate_points: rays concatenate deterministically") {
  const std::vector<Complex> pts =
      generate_points(RaysSpec{0.5, {0.0, std::numbers::pi}, 2});
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Complex(0.5, 0.0));
  CHECK(pts[1] == Complex(0.75, 0.0));
  CHECK(std::abs(pts[2].real() + 0.5) < 1e-12);
  CHECK(std::abs(pts[3].real() + 0.75) < 1e-12);
}

TEST_CASE("generate_unit_vectors: deterministic in the seed") {
  const RandomUnitVectorsSpec spec{6, 10};
  const auto a = generate_unit_vectors(spec, 42);
  const auto b = generate_unit_vectors(spec, 42);
  const auto c = generate_unit_vectors(spec, 43);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& v : a) {
    CHECK(std::abs(vector_norm(v) - 1.0) < 1e-12);
  }
}

TEST_CASE("run_pipeline: centered tridiagonal reproduces the closed form") {
  RunConfig cfg;
  cfg.space = SpaceKind::TridiagExample;
  cfg.tridiag_centered = true;
  cfg.tridiag_count = 100;
  cfg.section_sizes = {10, 100};

  const RunResult result = run_pipeline(cfg);
  const ReportDocument& r = result.report;
  CHECK(r.class_count == 1);
  CHECK(r.separation.gamma == 0.5);
  CHECK(r.bessel_schur == 2.0);
  CHECK(r.degree_bound_value == 5);
  CHECK(std::abs(r.profile.back().lambda_min -
                 (1.0 - std::cos(std::numbers::pi / 101.0))) < 1e-9);
  CHECK(std::abs(r.profile.back().lambda_max -
                 (1.0 + std::cos(std::numbers::pi / 101.0))) < 1e-9);
  CHECK(r.section_sizes == std::vector<std::size_t>{10, 100});
  CHECK(r.abs_gram_ratio_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run_pipeline: section sizes are clipped to the sequence length") {
  const RunConfig cfg =
      parse_config(R"({"space": "hardy", "points": [[0.1, 0.0], [0.2, 0.0]]})");
  const RunResult result = run_pipeline(cfg);
  CHECK(result.report.section_sizes == std::vector<std::size_t>{2});
  CHECK(result.report.n == 2);
  CHECK(result.gramian.dim() == 2);
}

TEST_CASE("run_pipeline: explicit orthonormal vectors") {
  const RunConfig cfg = parse_config(R"({
    "space": {"type": "explicit_vectors",
              "vectors": [[[1,0],[0,0]], [[0,0],[1,0]]]}
  })");
  const RunResult result = run_pipeline(cfg);
  CHECK(result.report.class_count == 1);
  CHECK(result.report.separation.gamma == 0.0);
  CHECK(result.report.profile.back().lambda_min == doctest::Approx(1.0));
  CHECK(result.report.profile.back().lambda_max == doctest::Approx(1.0));
  CHECK(result.report.warnings.empty());
}

TEST_CASE("run_pipeline: determinism modulo the timestamp") {
  const std::string text = R"({
    "space": {"type": "tridiag_example", "mode": "centered", "count": 40},
    "analysis": {"section_sizes": [10, 40], "tau": 0.5}
  })";
  const std::string a = run_pipeline(parse_config(text)).report.to_json();
  const std::string b = run_pipeline(parse_config(text)).report.to_json();
  CHECK(json_without_timestamp(a) == json_without_timestamp(b));
}

TEST_CASE("run_pipeline: cnp diagnostic lands in the report") {
  const RunConfig cfg = parse_config(R"({
    "space": "hardy",
    "points": [[0.5, 0.0], [0.0, 0.5]],
    "cnp": {"omega0": [0.0, 0.0]}
  })");
  const RunResult result = run_pipeline(cfg);
  CHECK(result.report.cnp_present);
  CHECK(result.report.cnp_lambda_min >= -1e-12);
  CHECK(result.report.cnp_positive_semidefinite);
}

TEST_CASE("CSV round-trip reproduces the reported extremes") {
  const RunConfig cfg = parse_config(R"({
    "space": "hardy",
    "points": {"type": "radial_exponential", "q": 0.5, "theta": 0.0, "count": 12},
    "analysis": {"section_sizes": [6, 12]}
  })");
  const RunResult result = run_pipeline(cfg);

  const HermitianMatrix read_back = gramian_from_csv(gramian_to_csv(result.gramian));
  REQUIRE(read_back.dim() == 12);
  const auto ev = eig_hermitian(read_back);
  CHECK(std::abs(ev.front() - result.report.profile.back().lambda_min) < 1e-9);
  CHECK(std::abs(ev.back() - result.report.profile.back().lambda_max) < 1e-9);

  CHECK_THROWS_AS(gramian_from_csv("bogus\n1,1,1,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(gramian_from_csv("i,j,re,im\n1,1,1,0\n1,2,0,0\n"),
                  std::invalid_argument);
}

TEST_CASE("write_run_files: emits the three artifacts atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "framekit_test_out";
  fs::remove_all(dir);

  RunConfig cfg;
  cfg.space = SpaceKind::TridiagExample;
  cfg.tridiag_centered = true;
  cfg.tridiag_count = 12;
  cfg.section_sizes = {6, 12};
  const RunResult result = run_pipeline(cfg);
  write_run_files(result, dir.string());

  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "gramian.csv"));
  CHECK(fs::exists(dir / "profile.csv"));
  CHECK_FALSE(fs::exists(dir / "report.json.tmp"));

  std::ifstream is(dir / "report.json");
  std::stringstream buffer;
  buffer << is.rdbuf();
  const json report = json::parse(buffer.str());
  CHECK(report["n"] == 12);
  CHECK(report["config"]["space"]["mode"] == "centered");

  // every warning corresponds to a defined condition
  const std::vector<std::string> known_prefixes{
      "sequence is not separated", "class ", "lambda_min has not stabilized",
      "cnp diagnostic reports"};
  for (const auto& w : report["warnings"]) {
    bool matched = false;
    for (const std::string& prefix : known_prefixes) {
      if (w.get<std::string>().rfind(prefix, 0) == 0) matched = true;
    }
    CHECK(matched);
  }
  fs::remove_all(dir);
}

TEST_CASE("error classification matches the exit-code contract") {
  // 1: configuration
  CHECK_THROWS_AS(parse_config("not json at all"), ConfigError);
  // 2: numerical (an ill-conditioned D(mu) Gram would throw NumericalError;
  // the eigensolver cap and series caps are covered in the module tests)
  CHECK_THROWS_AS(
      DirichletAlphaSpace(1.0, 1e-10, 10).kernel(Complex(0.9, 0.0), Complex(0.9, 0.0)),
      NumericalError);
}
