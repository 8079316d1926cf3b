#ifndef FRAMEKIT_RUNNER_HPP
#define FRAMEKIT_RUNNER_HPP

#include <string>
#include <vector>

#include "framekit/feichtinger.hpp"
#include "framekit/matrix.hpp"
#include "framekit/run_config.hpp"

namespace framekit {

struct ClassSummaryDoc {
  std::vector<std::size_t> indices;
  double gamma = 0.0;
  bool separated = true;
  double lambda_min = 0.0;  // at the full class size
  std::vector<SpectralSummary> profile;
};

/// Everything the JSON report carries. The layout is deterministic for a
/// fixed config up to the generated_at timestamp.
struct ReportDocument {
  std::string space_name;
  std::size_t n = 0;
  double tau = 0.0;
  std::vector<std::size_t> section_sizes;  // clipped to n, n appended
  SeparationEstimate separation;
  std::vector<std::size_t> degree_histogram;
  std::size_t max_degree = 0;
  long long degree_bound_value = 0;
  bool degree_within_bound = false;
  bool class_count_within_bound = false;
  double bessel_schur = 0.0;
  double bessel_spectral = 0.0;
  std::size_t class_count = 0;
  std::vector<ClassSummaryDoc> classes;
  std::vector<SpectralSummary> profile;
  double abs_gram_ratio_value = 0.0;
  bool cnp_present = false;
  Complex cnp_omega0{0.0, 0.0};
  double cnp_lambda_min = 0.0;
  bool cnp_positive_semidefinite = false;
  std::vector<std::string> warnings;
  std::string caveat;
  std::string generated_at;
  std::string config_echo;  // canonical JSON of the effective config

  std::string to_json() const;
};

struct RunResult {
  ReportDocument report;
  HermitianMatrix gramian;  // leading n x n section, written to gramian.csv
};

/// Builds the provider named by the config and runs the partition-and-
/// profile pipeline. Pure: no files touched.
RunResult run_pipeline(const RunConfig& config);

/// Writes report.json, gramian.csv and profile.csv into out_dir
/// (write-temp-then-rename).
void write_run_files(const RunResult& result, const std::string& out_dir);

std::string gramian_to_csv(const HermitianMatrix& m);
HermitianMatrix gramian_from_csv(const std::string& text);
std::string profile_to_csv(const std::vector<SpectralSummary>& profile);

}  // namespace framekit

#endif  // FRAMEKIT_RUNNER_HPP
