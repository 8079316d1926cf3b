#include "framekit/runner.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "framekit/errors.hpp"
#include "framekit/kernels.hpp"
#include "framekit/sequences.hpp"
#include "json.hpp"

namespace framekit {

namespace {

using nlohmann::json;

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

json build_config_echo(const RunConfig& cfg, std::size_t n) {
  json space;
  switch (cfg.space) {
    case SpaceKind::Hardy:
      space = {{"type", "hardy"}};
      break;
    case SpaceKind::DirichletAlpha:
      space = {{"type", "dirichlet_alpha"}, {"alpha", cfg.alpha}};
      break;
    case SpaceKind::DirichletMu: {
      json masses = json::array();
      for (const PointMass& pm : cfg.masses) {
        masses.push_back({{"zeta", complex_to_json(pm.zeta)}, {"c", pm.c}});
      }
      space = {{"type", "dirichlet_mu"},
               {"masses", masses},
               {"truncation", cfg.dmu_truncation}};
      break;
    }
    case SpaceKind::ExplicitVectors:
      if (cfg.has_vector_generator) {
        space = {{"type", "explicit_vectors"},
                 {"generator",
                  {{"type", "random_unit_vectors"},
                   {"dimension", cfg.vector_generator.dimension},
                   {"count", cfg.vector_generator.count}}}};
      } else {
        json vectors = json::array();
        for (const auto& v : cfg.vectors) {
          json coords = json::array();
          for (const Complex& x : v) coords.push_back(complex_to_json(x));
          vectors.push_back(coords);
        }
        space = {{"type", "explicit_vectors"}, {"vectors", vectors}};
      }
      break;
    case SpaceKind::TridiagExample:
      space = {{"type", "tridiag_example"},
               {"mode", cfg.tridiag_centered ? "centered" : "interleaved"},
               {"count", cfg.tridiag_count}};
      break;
  }

  json echo;
  echo["space"] = space;
  echo["analysis"] = {{"section_sizes", cfg.section_sizes}, {"tau", cfg.tau}};
  echo["n"] = n;
  echo["seed"] = cfg.seed;
  echo["output"] = {{"dir", cfg.out_dir}};
  if (!cfg.points.empty()) {
    json points = json::array();
    for (const Complex& p : cfg.points) points.push_back(complex_to_json(p));
    echo["points"] = points;
  }
  if (cfg.cnp_requested) echo["cnp"] = {{"omega0", complex_to_json(cfg.cnp_omega0)}};
  return echo;
}

json summary_to_json(const SpectralSummary& s) {
  return {{"n", s.n}, {"lambda_min", s.lambda_min}, {"lambda_max", s.lambda_max}};
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << text;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string ReportDocument::to_json() const {
  json j;
  j["space"] = space_name;
  j["n"] = n;
  j["tau"] = tau;
  j["section_sizes"] = section_sizes;
  j["separation"] = {{"gamma", separation.gamma}, {"separated", separation.separated}};
  j["degree"] = {{"histogram", degree_histogram},
                 {"max_degree", max_degree},
                 {"bound", degree_bound_value},
                 {"within_bound", degree_within_bound},
                 {"class_count_within_bound", class_count_within_bound}};
  j["bessel"] = {{"schur", bessel_schur}, {"spectral", bessel_spectral}};
  j["class_count"] = class_count;
  json classes_json = json::array();
  for (const ClassSummaryDoc& cls : classes) {
    json profile_json = json::array();
    for (const SpectralSummary& s : cls.profile) profile_json.push_back(summary_to_json(s));
    classes_json.push_back({{"indices", cls.indices},
                            {"gamma", cls.gamma},
                            {"separated", cls.separated},
                            {"lambda_min", cls.lambda_min},
                            {"profile", profile_json}});
  }
  j["classes"] = classes_json;
  json profile_json = json::array();
  for (const SpectralSummary& s : profile) profile_json.push_back(summary_to_json(s));
  j["profile"] = profile_json;
  j["abs_gram_ratio"] = abs_gram_ratio_value;
  if (cnp_present) {
    j["cnp"] = {{"omega0", complex_to_json(cnp_omega0)},
                {"lambda_min", cnp_lambda_min},
                {"positive_semidefinite", cnp_positive_semidefinite}};
  } else {
    j["cnp"] = nullptr;
  }
  j["warnings"] = warnings;
  j["caveat"] = caveat;
  j["generated_at"] = generated_at;
  j["config"] = json::parse(config_echo);
  return j.dump(2) + "\n";
}

RunResult run_pipeline(const RunConfig& cfg) {
  std::shared_ptr<const KernelSpace> space;
  std::unique_ptr<GramianProvider> provider;
  std::size_t n = 0;

  switch (cfg.space) {
    case SpaceKind::Hardy:
      space = std::make_shared<HardySpace>();
      provider = std::make_unique<NormalizedKernelProvider>(space, cfg.points);
      n = cfg.points.size();
      break;
    case SpaceKind::DirichletAlpha:
      space = std::make_shared<DirichletAlphaSpace>(cfg.alpha);
      provider = std::make_unique<NormalizedKernelProvider>(space, cfg.points);
      n = cfg.points.size();
      break;
    case SpaceKind::DirichletMu:
      space = std::make_shared<DMuSpace>(PointMassMeasure(cfg.masses), cfg.dmu_truncation);
      provider = std::make_unique<NormalizedKernelProvider>(space, cfg.points);
      n = cfg.points.size();
      break;
    case SpaceKind::ExplicitVectors: {
      std::vector<std::vector<Complex>> vectors =
          cfg.has_vector_generator ? generate_unit_vectors(cfg.vector_generator, cfg.seed)
                                   : cfg.vectors;
      const ExplicitSequence sequence(vectors.front().size(), std::move(vectors));
      provider = std::make_unique<ExplicitGramianProvider>(sequence.normalize());
      n = sequence.size();
      break;
    }
    case SpaceKind::TridiagExample:
      provider = std::make_unique<TridiagExampleProvider>(
          cfg.tridiag_centered ? TridiagExampleProvider::Mode::Centered
                               : TridiagExampleProvider::Mode::Interleaved);
      n = cfg.tridiag_count;
      break;
  }

  const PartitionReport pr =
      separated_partition_report(*provider, n, cfg.tau, cfg.section_sizes);

  RunResult result{ReportDocument{}, provider->section(n)};
  ReportDocument& doc = result.report;
  doc.space_name = provider->name();
  doc.n = n;
  doc.tau = cfg.tau;
  for (const SpectralSummary& s : pr.profile) doc.section_sizes.push_back(s.n);
  doc.separation = pr.separation;
  doc.degree_histogram = pr.degree_histogram;
  doc.max_degree = pr.max_degree;
  doc.degree_bound_value = pr.bound;
  doc.degree_within_bound = pr.degree_within_bound;
  doc.class_count_within_bound = pr.class_count_within_bound;
  doc.bessel_schur = pr.bessel_schur;
  doc.bessel_spectral = pr.bessel_spectral;
  doc.class_count = pr.partition.class_count;
  for (const ClassReport& cls : pr.classes) {
    ClassSummaryDoc out;
    out.indices = cls.indices;
    out.gamma = cls.gamma;
    out.separated = cls.separated;
    out.profile = cls.profile;
    out.lambda_min = cls.profile.back().lambda_min;
    doc.classes.push_back(std::move(out));
  }
  doc.profile = pr.profile;
  doc.abs_gram_ratio_value = abs_gram_ratio(*provider, n);
  doc.warnings = pr.warnings;
  doc.caveat = pr.caveat;

  if (cfg.cnp_requested && space) {
    const CnpDiagnostic diag = cnp_matrix(*space, cfg.cnp_omega0, cfg.points);
    doc.cnp_present = true;
    doc.cnp_omega0 = cfg.cnp_omega0;
    doc.cnp_lambda_min = diag.lambda_min;
    doc.cnp_positive_semidefinite = diag.positive_semidefinite;
    if (!diag.positive_semidefinite) {
      doc.warnings.push_back("cnp diagnostic reports a negative minimal eigenvalue");
    }
  }

  doc.generated_at = iso_utc_now();
  doc.config_echo = build_config_echo(cfg, n).dump();
  return result;
}

std::string gramian_to_csv(const HermitianMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "i,j,re,im\n";
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex v = m(i, j);
      os << (i + 1) << ',' << (j + 1) << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
  return os.str();
}

HermitianMatrix gramian_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("i,j,re,im", 0) != 0) {
    throw std::invalid_argument("gramian CSV must start with header i,j,re,im");
  }
  struct Cell {
    std::size_t i, j;
    Complex v;
  };
  std::vector<Cell> cells;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Cell cell;
    double re = 0.0, im = 0.0;
    char c1, c2, c3;
    std::istringstream row(line);
    if (!(row >> cell.i >> c1 >> cell.j >> c2 >> re >> c3 >> im) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      throw std::invalid_argument("malformed gramian CSV row: " + line);
    }
    cell.v = Complex(re, im);
    n = std::max({n, cell.i, cell.j});
    cells.push_back(cell);
  }
  if (n == 0 || cells.size() != n * n) {
    throw std::invalid_argument("gramian CSV does not hold a full square matrix");
  }
  std::vector<Complex> data(n * n);
  for (const Cell& cell : cells) data[(cell.i - 1) * n + (cell.j - 1)] = cell.v;
  return HermitianMatrix(n, data);
}

std::string profile_to_csv(const std::vector<SpectralSummary>& profile) {
  std::ostringstream os;
  os.precision(17);
  os << "N,lambda_min,lambda_max\n";
  for (const SpectralSummary& s : profile) {
    os << s.n << ',' << s.lambda_min << ',' << s.lambda_max << '\n';
  }
  return os.str();
}

void write_run_files(const RunResult& result, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text_atomic(dir / "report.json", result.report.to_json());
  write_text_atomic(dir / "gramian.csv", gramian_to_csv(result.gramian));
  write_text_atomic(dir / "profile.csv", profile_to_csv(result.report.profile));
}

}  // namespace framekit
