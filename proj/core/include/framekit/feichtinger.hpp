#ifndef FRAMEKIT_FEICHTINGER_HPP
#define FRAMEKIT_FEICHTINGER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framekit/matrix.hpp"
#include "framekit/sequences.hpp"

namespace framekit {

/// Finite symmetric, irreflexive adjacency over 1-based indices: i and j
/// are enemies when |<x_i, x_j>|^2 >= tau.
class EnemyGraph {
 public:
  EnemyGraph(std::size_t n, double tau);

  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const;

  std::size_t size() const { return n_; }
  double tau() const { return tau_; }
  std::size_t degree(std::size_t i) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  std::vector<std::size_t> degree_histogram() const;

 private:
  std::size_t n_;
  double tau_;
  std::vector<bool> adj_;
  std::vector<std::size_t> degree_;
};

/// Threshold the Gramian moduli of a normalized provider: edge (i, j) iff
/// |entry(i, j)|^2 >= tau (non-strict), over indices 1..n.
EnemyGraph enemy_graph(const GramianProvider& provider, std::size_t n, double tau = 0.5);

struct Partition {
  std::vector<std::size_t> class_of;  // position i-1 holds the class of index i, ids 1..class_count
  std::size_t class_count = 0;

  std::vector<std::vector<std::size_t>> classes() const;
};

/// First-fit greedy coloring in index order: each index joins the
/// lowest-id class containing none of its enemies, or opens a new class.
/// Never uses more than max_degree + 1 classes.
Partition greedy_partition(const EnemyGraph& graph);

/// floor(2C) + 1, the enemy-count bound at threshold 1/2 for a normalized
/// sequence with Bessel bound C. Requires C >= 1.
long long degree_bound(double c);

struct SeparationEstimate {
  double gamma = 0.0;
  bool separated = true;  // false once gamma >= 1 - 1e-12
};

/// max over n != m <= N of |entry(n, m)| for a normalized provider.
SeparationEstimate separation_constant(const GramianProvider& provider, std::size_t n);

enum class BesselMode {
  Schur,     // certified row-sum upper bound for the section norm
  Spectral,  // lambda_max of the section, a lower bound for the Bessel constant
};

double bessel_estimate(const GramianProvider& provider, std::size_t n, BesselMode mode);

/// Extreme eigenvalues of the leading sections at each requested size
/// (strictly ascending). Interlacing makes lambda_min non-increasing and
/// lambda_max non-decreasing along the list.
std::vector<SpectralSummary> riesz_profile(const GramianProvider& provider,
                                           std::span<const std::size_t> sizes);

/// lambda_max of the entrywise-modulus section divided by lambda_max of the
/// section itself. Reported as-is.
double abs_gram_ratio(const GramianProvider& provider, std::size_t n);

/// View of a provider restricted to a fixed list of 1-based indices. Holds
/// a reference; the base provider must outlive the subset.
class SubsetProvider final : public GramianProvider {
 public:
  SubsetProvider(const GramianProvider& base, std::vector<std::size_t> indices);

  Complex entry(std::size_t n, std::size_t m) const override;
  bool normalized() const override { return base_->normalized(); }
  std::string name() const override { return base_->name() + " [subset]"; }

  std::size_t size() const { return indices_.size(); }

 private:
  const GramianProvider* base_;
  std::vector<std::size_t> indices_;
};

struct ClassReport {
  std::vector<std::size_t> indices;  // ascending, 1-based
  double gamma = 0.0;
  bool separated = true;
  std::vector<SpectralSummary> profile;  // section sizes clipped to the class size
};

inline constexpr const char* kFiniteSectionCaveat =
    "finite-section estimates bound, but do not certify, infinite-sequence properties";

struct PartitionReport {
  std::size_t n = 0;
  double tau = 0.0;
  SeparationEstimate separation;
  Partition partition;
  std::vector<ClassReport> classes;
  std::vector<SpectralSummary> profile;  // whole sequence
  double bessel_schur = 0.0;
  double bessel_spectral = 0.0;
  std::size_t max_degree = 0;
  long long bound = 0;  // floor(2 * bessel_schur) + 1
  bool degree_within_bound = false;
  bool class_count_within_bound = false;
  std::vector<std::size_t> degree_histogram;
  std::vector<std::string> warnings;
  std::string caveat = kFiniteSectionCaveat;
};

/// The full pipeline: enemy graph at tau, greedy partition, per-class
/// separation constants and spectral profiles, Bessel estimates and the
/// degree bound, plus warnings (not separated, lambda_min not stabilized
/// across the last two sizes).
PartitionReport separated_partition_report(const GramianProvider& provider, std::size_t n,
                                           double tau,
                                           std::span<const std::size_t> section_sizes);

}  // namespace framekit

#endif  // FRAMEKIT_FEICHTINGER_HPP
