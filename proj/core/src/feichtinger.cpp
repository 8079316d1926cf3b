#include "framekit/feichtinger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "framekit/errors.hpp"
#include "framekit/spectral.hpp"

namespace framekit {

namespace {

constexpr double kNotSeparatedThreshold = 1.0 - 1e-12;
constexpr double kStabilizationRelTol = 0.05;

void require_normalized(const GramianProvider& provider) {
  if (!provider.normalized()) {
    throw std::invalid_argument("operation requires a normalized Gramian provider");
  }
}

}  // namespace

EnemyGraph::EnemyGraph(std::size_t n, double tau)
    : n_(n), tau_(tau), adj_(n * n, false), degree_(n, 0) {
  if (n_ == 0) throw std::invalid_argument("enemy graph needs at least one index");
  if (!(tau_ > 0.0) || tau_ > 1.0) {
    throw std::invalid_argument("tau must lie in (0, 1]");
  }
}

void EnemyGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > n_ || j > n_) {
    throw std::invalid_argument("enemy graph index out of range");
  }
  if (i == j) throw std::invalid_argument("enemy graph has no self-loops");
  if (adjacent(i, j)) return;
  adj_[(i - 1) * n_ + (j - 1)] = true;
  adj_[(j - 1) * n_ + (i - 1)] = true;
  ++degree_[i - 1];
  ++degree_[j - 1];
}

bool EnemyGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > n_ || j > n_) {
    throw std::invalid_argument("enemy graph index out of range");
  }
  return adj_[(i - 1) * n_ + (j - 1)];
}

std::size_t EnemyGraph::degree(std::size_t i) const {
  if (i == 0 || i > n_) throw std::invalid_argument("enemy graph index out of range");
  return degree_[i - 1];
}

std::size_t EnemyGraph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v : degree_) d = std::max(d, v);
  return d;
}

std::size_t EnemyGraph::edge_count() const {
  std::size_t s = 0;
  for (std::size_t v : degree_) s += v;
  return s / 2;
}

std::vector<std::size_t> EnemyGraph::degree_histogram() const {
  std::vector<std::size_t> hist(max_degree() + 1, 0);
  for (std::size_t v : degree_) ++hist[v];
  return hist;
}

EnemyGraph enemy_graph(const GramianProvider& provider, std::size_t n, double tau) {
  require_normalized(provider);
  EnemyGraph graph(n, tau);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (std::norm(provider.entry(i, j)) >= tau) graph.add_edge(i, j);
    }
  }
  return graph;
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    out[class_of[i] - 1].push_back(i + 1);
  }
  return out;
}

Partition greedy_partition(const EnemyGraph& graph) {
  const std::size_t n = graph.size();
  Partition part;
  part.class_of.assign(n, 0);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t chosen = 0;
    for (std::size_t cls = 0; cls < members.size(); ++cls) {
      bool clear = true;
      for (std::size_t j : members[cls]) {
        if (graph.adjacent(i, j)) {
          clear = false;
          break;
        }
      }
      if (clear) {
        chosen = cls + 1;
        break;
      }
    }
    if (chosen == 0) {
      members.emplace_back();
      chosen = members.size();
    }
    members[chosen - 1].push_back(i);
    part.class_of[i - 1] = chosen;
  }
  part.class_count = members.size();
  return part;
}

long long degree_bound(double c) {
  if (!(c >= 1.0)) {
    throw std::invalid_argument("a Bessel bound of a normalized sequence is >= 1");
  }
  return static_cast<long long>(std::floor(2.0 * c)) + 1;
}

SeparationEstimate separation_constant(const GramianProvider& provider, std::size_t n) {
  require_normalized(provider);
  if (n < 2) throw std::invalid_argument("separation constant needs at least two indices");
  double gamma = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      gamma = std::max(gamma, std::abs(provider.entry(i, j)));
    }
  }
  return SeparationEstimate{gamma, gamma < kNotSeparatedThreshold};
}

double bessel_estimate(const GramianProvider& provider, std::size_t n, BesselMode mode) {
  if (n == 0) throw std::invalid_argument("bessel_estimate needs at least one index");
  const HermitianMatrix section = provider.section(n);
  if (mode == BesselMode::Schur) return schur_row_bound(section);
  return eig_hermitian(section).back();
}

std::vector<SpectralSummary> riesz_profile(const GramianProvider& provider,
                                           std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("riesz_profile needs at least one size");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw std::invalid_argument("section sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument("section sizes must be strictly ascending");
    }
  }
  const HermitianMatrix largest = provider.section(sizes.back());
  std::vector<SpectralSummary> out;
  out.reserve(sizes.size());
  for (std::size_t s : sizes) {
    out.push_back(spectral_summary(s == sizes.back() ? largest : largest.leading_section(s)));
  }
  return out;
}

double abs_gram_ratio(const GramianProvider& provider, std::size_t n) {
  if (n == 0) throw std::invalid_argument("abs_gram_ratio needs at least one index");
  const HermitianMatrix section = provider.section(n);
  const double lmax = eig_hermitian(section).back();
  if (lmax < 1e-13) throw NumericalError("section norm is numerically zero");
  const double lmax_abs = eig_hermitian(section.entrywise_abs()).back();
  return lmax_abs / lmax;
}

SubsetProvider::SubsetProvider(const GramianProvider& base, std::vector<std::size_t> indices)
    : base_(&base), indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("subset must be nonempty");
  for (std::size_t idx : indices_) {
    if (idx == 0) throw std::invalid_argument("subset indices are 1-based");
  }
}

Complex SubsetProvider::entry(std::size_t n, std::size_t m) const {
  if (n == 0 || n > indices_.size() || m == 0 || m > indices_.size()) {
    throw std::invalid_argument("subset index out of range");
  }
  return base_->entry(indices_[n - 1], indices_[m - 1]);
}

namespace {

std::vector<std::size_t> clip_sizes(std::span<const std::size_t> sizes, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t s : sizes) {
    const std::size_t clipped = std::min(s, limit);
    if (out.empty() || clipped > out.back()) out.push_back(clipped);
  }
  if (out.empty() || out.back() != limit) out.push_back(limit);
  return out;
}

}  // namespace

PartitionReport separated_partition_report(const GramianProvider& provider, std::size_t n,
                                           double tau,
                                           std::span<const std::size_t> section_sizes) {
  require_normalized(provider);
  if (n < 2) throw std::invalid_argument("partition report needs at least two indices");

  PartitionReport report;
  report.n = n;
  report.tau = tau;
  report.separation = separation_constant(provider, n);

  const EnemyGraph graph = enemy_graph(provider, n, tau);
  report.partition = greedy_partition(graph);
  report.max_degree = graph.max_degree();
  report.degree_histogram = graph.degree_histogram();

  report.bessel_schur = bessel_estimate(provider, n, BesselMode::Schur);
  report.bessel_spectral = bessel_estimate(provider, n, BesselMode::Spectral);
  report.bound = degree_bound(report.bessel_schur);
  report.degree_within_bound =
      static_cast<long long>(report.max_degree) <= report.bound;
  report.class_count_within_bound = report.partition.class_count <= report.max_degree + 1;

  const std::vector<std::size_t> sizes = clip_sizes(section_sizes, n);
  report.profile = riesz_profile(provider, sizes);

  for (const std::vector<std::size_t>& members : report.partition.classes()) {
    ClassReport cls;
    cls.indices = members;
    if (members.size() >= 2) {
      const SubsetProvider sub(provider, members);
      const SeparationEstimate sep = separation_constant(sub, members.size());
      cls.gamma = sep.gamma;
      cls.separated = sep.separated;
      cls.profile = riesz_profile(sub, clip_sizes(section_sizes, members.size()));
    } else {
      cls.gamma = 0.0;
      cls.separated = true;
      cls.profile = {spectral_summary(provider.section(members))};
    }
    report.classes.push_back(std::move(cls));
  }

  if (!report.separation.separated) {
    report.warnings.push_back("sequence is not separated at the sampled size");
  }
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    if (!report.classes[c].separated) {
      report.warnings.push_back("class " + std::to_string(c + 1) +
                                " is not separated at the sampled size");
    }
  }
  if (report.profile.size() >= 2) {
    const double last = report.profile[report.profile.size() - 1].lambda_min;
    const double prev = report.profile[report.profile.size() - 2].lambda_min;
    const double rel = std::abs(last - prev) / std::max(std::abs(prev), 1e-15);
    if (rel > kStabilizationRelTol) {
      report.warnings.push_back(
          "lambda_min has not stabilized across the last two section sizes");
    }
  }
  return report;
}

}  // namespace framekit
