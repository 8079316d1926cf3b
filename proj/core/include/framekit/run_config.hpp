#ifndef FRAMEKIT_RUN_CONFIG_HPP
#define FRAMEKIT_RUN_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framekit/kernels.hpp"
#include "framekit/matrix.hpp"

namespace framekit {

enum class SpaceKind { Hardy, DirichletAlpha, DirichletMu, ExplicitVectors, TridiagExample };

/// lambda_n = (1 - q^n) e^{i theta}, n = 1..count: the classical radial
/// testbed for interpolating-sequence experiments.
struct RadialExponentialSpec {
  double q = 0.5;
  double theta = 0.0;
  std::size_t count = 0;
};

/// Concatenates one radial exponential sequence per ray angle, in order.
struct RaysSpec {
  double q = 0.5;
  std::vector<double> thetas;
  std::size_t count_per_ray = 0;
};

std::vector<Complex> generate_points(const RadialExponentialSpec& spec);
std::vector<Complex> generate_points(const RaysSpec& spec);

struct RandomUnitVectorsSpec {
  std::size_t dimension = 0;
  std::size_t count = 0;
};

/// Deterministic random unit vectors in C^d (mt19937_64 + Box-Muller,
/// self-contained so the stream does not depend on the standard library
/// vendor).
std::vector<std::vector<Complex>> generate_unit_vectors(const RandomUnitVectorsSpec& spec,
                                                        std::uint64_t seed);

struct RunConfig {
  SpaceKind space = SpaceKind::Hardy;

  double alpha = 1.0;                     // dirichlet_alpha
  std::vector<PointMass> masses;          // dirichlet_mu
  std::size_t dmu_truncation = 40;

  std::vector<std::vector<Complex>> vectors;  // explicit_vectors
  bool has_vector_generator = false;
  RandomUnitVectorsSpec vector_generator;

  bool tridiag_centered = false;
  std::size_t tridiag_count = 0;

  std::vector<Complex> points;  // kernel spaces

  std::vector<std::size_t> section_sizes = {10, 20, 40};
  double tau = 0.5;

  bool cnp_requested = false;
  Complex cnp_omega0{0.0, 0.0};

  std::string out_dir = "out";
  std::uint64_t seed = 12345;
};

/// Parses and validates a JSON run configuration, filling defaults
/// (tau = 1/2, section sizes {10, 20, 40}, output directory "out"). Point
/// generators are resolved here; the random vector generator stays symbolic
/// so a later --seed override still applies. Throws ConfigError with the
/// offending field path.
RunConfig parse_config(const std::string& text);

}  // namespace framekit

#endif  // FRAMEKIT_RUN_CONFIG_HPP
