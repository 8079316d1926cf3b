#include "framekit/run_config.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "framekit/errors.hpp"
#include "json.hpp"

namespace framekit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + key, "required field is missing");
  return *it;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::size_t count_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(path, "expected a nonnegative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Complex complex_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected a complex number encoded as [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Complex disc_point_at(const json& j, const std::string& path) {
  const Complex p = complex_at(j, path);
  if (!is_finite(p) || std::abs(p) > 1.0 - kDiscBoundaryGuard) {
    fail(path, "point lies outside the guarded open unit disc");
  }
  return p;
}

std::vector<Complex> parse_points(const json& j, const std::string& path) {
  if (j.is_array()) {
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
      out.push_back(disc_point_at(j[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
  }
  if (!j.is_object()) fail(path, "expected a point array or a generator object");
  const std::string type = string_at(field(j, "type", path + "."), path + ".type");
  if (type == "radial_exponential") {
    RadialExponentialSpec spec;
    spec.q = number_at(field(j, "q", path + "."), path + ".q");
    if (!(spec.q > 0.0) || !(spec.q < 1.0)) fail(path + ".q", "q must lie in (0, 1)");
    spec.theta = number_at(field(j, "theta", path + "."), path + ".theta");
    spec.count = count_at(field(j, "count", path + "."), path + ".count");
    if (spec.count < 1) fail(path + ".count", "count must be at least 1");
    std::vector<Complex> out = generate_points(spec);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (std::abs(out[k]) > 1.0 - kDiscBoundaryGuard) {
        fail(path + ".count",
             "generated point " + std::to_string(k + 1) +
                 " violates the disc boundary guard (reduce count or q)");
      }
    }
    return out;
  }
  if (type == "rays") {
    RaysSpec spec;
    spec.q = number_at(field(j, "q", path + "."), path + ".q");
    if (!(spec.q > 0.0) || !(spec.q < 1.0)) fail(path + ".q", "q must lie in (0, 1)");
    const json& thetas = field(j, "thetas", path + ".");
    if (!thetas.is_array() || thetas.empty()) {
      fail(path + ".thetas", "expected a nonempty array of angles");
    }
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      spec.thetas.push_back(
          number_at(thetas[k], path + ".thetas[" + std::to_string(k) + "]"));
    }
    spec.count_per_ray =
        count_at(field(j, "count_per_ray", path + "."), path + ".count_per_ray");
    if (spec.count_per_ray < 1) fail(path + ".count_per_ray", "count must be at least 1");
    std::vector<Complex> out = generate_points(spec);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (std::abs(out[k]) > 1.0 - kDiscBoundaryGuard) {
        fail(path + ".count_per_ray",
             "generated point " + std::to_string(k + 1) +
                 " violates the disc boundary guard (reduce count or q)");
      }
    }
    return out;
  }
  fail(path + ".type", "unknown point generator '" + type + "'");
}

}  // namespace

std::vector<Complex> generate_points(const RadialExponentialSpec& spec) {
  if (!(spec.q > 0.0) || !(spec.q < 1.0)) {
    throw std::invalid_argument("q must lie in (0, 1)");
  }
  if (spec.count < 1) throw std::invalid_argument("count must be at least 1");
  const Complex direction = std::polar(1.0, spec.theta);
  std::vector<Complex> out;
  out.reserve(spec.count);
  double qn = 1.0;
  for (std::size_t n = 1; n <= spec.count; ++n) {
    qn *= spec.q;
    out.push_back((1.0 - qn) * direction);
  }
  return out;
}

std::vector<Complex> generate_points(const RaysSpec& spec) {
  if (spec.thetas.empty()) throw std::invalid_argument("rays need at least one angle");
  std::vector<Complex> out;
  out.reserve(spec.thetas.size() * spec.count_per_ray);
  for (double theta : spec.thetas) {
    const std::vector<Complex> ray =
        generate_points(RadialExponentialSpec{spec.q, theta, spec.count_per_ray});
    out.insert(out.end(), ray.begin(), ray.end());
  }
  return out;
}

std::vector<std::vector<Complex>> generate_unit_vectors(const RandomUnitVectorsSpec& spec,
                                                        std::uint64_t seed) {
  if (spec.dimension < 1) throw std::invalid_argument("dimension must be at least 1");
  if (spec.count < 1) throw std::invalid_argument("count must be at least 1");
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    // (0, 1], safe for the log below.
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
  };
  std::vector<std::vector<Complex>> out(spec.count);
  for (auto& v : out) {
    v.resize(spec.dimension);
    double norm_sq = 0.0;
    for (auto& x : v) {
      const double radius = std::sqrt(-2.0 * std::log(uniform()));
      const double angle = 2.0 * std::numbers::pi * uniform();
      x = Complex(radius * std::cos(angle), radius * std::sin(angle));
      norm_sq += std::norm(x);
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& x : v) x /= norm;
  }
  return out;
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON (") + e.what() + ")");
  }
  if (!root.is_object()) throw ConfigError("config: expected a JSON object");

  RunConfig cfg;

  json space = field(root, "space", "");
  if (space.is_string()) space = json{{"type", space.get<std::string>()}};
  if (!space.is_object()) throw ConfigError("space: expected an object or a string tag");
  const std::string type = string_at(field(space, "type", "space."), "space.type");

  // analysis block first so tridiag can default its count from the sizes
  if (root.contains("analysis")) {
    const json& analysis = root["analysis"];
    if (!analysis.is_object()) throw ConfigError("analysis: expected an object");
    if (analysis.contains("section_sizes")) {
      const json& sizes = analysis["section_sizes"];
      if (!sizes.is_array() || sizes.empty()) {
        throw ConfigError("analysis.section_sizes: expected a nonempty array");
      }
      cfg.section_sizes.clear();
      for (std::size_t k = 0; k < sizes.size(); ++k) {
        const std::string path = "analysis.section_sizes[" + std::to_string(k) + "]";
        const std::size_t s = count_at(sizes[k], path);
        if (s < 1) fail(path, "section sizes must be positive");
        if (!cfg.section_sizes.empty() && s <= cfg.section_sizes.back()) {
          fail(path, "section sizes must be strictly ascending");
        }
        cfg.section_sizes.push_back(s);
      }
    }
    if (analysis.contains("tau")) {
      cfg.tau = number_at(analysis["tau"], "analysis.tau");
      if (!(cfg.tau > 0.0) || cfg.tau > 1.0) {
        throw ConfigError("analysis.tau: tau must lie in (0, 1]");
      }
    }
  }

  if (type == "hardy") {
    cfg.space = SpaceKind::Hardy;
  } else if (type == "dirichlet_alpha") {
    cfg.space = SpaceKind::DirichletAlpha;
    cfg.alpha = number_at(field(space, "alpha", "space."), "space.alpha");
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0) {
      throw ConfigError("space.alpha: alpha must lie in [0, 1]");
    }
  } else if (type == "dirichlet_mu") {
    cfg.space = SpaceKind::DirichletMu;
    const json& masses = field(space, "masses", "space.");
    if (!masses.is_array() || masses.empty()) {
      throw ConfigError("space.masses: expected a nonempty array of point masses");
    }
    for (std::size_t k = 0; k < masses.size(); ++k) {
      const std::string path = "space.masses[" + std::to_string(k) + "]";
      if (!masses[k].is_object()) fail(path, "expected an object {zeta, c}");
      PointMass pm;
      pm.zeta = complex_at(field(masses[k], "zeta", path + "."), path + ".zeta");
      if (std::abs(std::abs(pm.zeta) - 1.0) > 1e-12) {
        fail(path + ".zeta", "support point is not unimodular");
      }
      pm.c = number_at(field(masses[k], "c", path + "."), path + ".c");
      if (!(pm.c > 0.0)) fail(path + ".c", "mass must be positive");
      cfg.masses.push_back(pm);
    }
    if (space.contains("truncation")) {
      cfg.dmu_truncation = count_at(space["truncation"], "space.truncation");
      if (cfg.dmu_truncation < 1 || cfg.dmu_truncation > 200) {
        throw ConfigError("space.truncation: truncation degree must lie in [1, 200]");
      }
    }
  } else if (type == "explicit_vectors") {
    cfg.space = SpaceKind::ExplicitVectors;
    if (space.contains("generator")) {
      const json& gen = space["generator"];
      const std::string gtype =
          string_at(field(gen, "type", "space.generator."), "space.generator.type");
      if (gtype != "random_unit_vectors") {
        throw ConfigError("space.generator.type: unknown vector generator '" + gtype + "'");
      }
      cfg.has_vector_generator = true;
      cfg.vector_generator.dimension =
          count_at(field(gen, "dimension", "space.generator."), "space.generator.dimension");
      cfg.vector_generator.count =
          count_at(field(gen, "count", "space.generator."), "space.generator.count");
      if (cfg.vector_generator.dimension < 1) {
        throw ConfigError("space.generator.dimension: must be at least 1");
      }
      if (cfg.vector_generator.count < 2) {
        throw ConfigError("space.generator.count: at least two vectors required");
      }
    } else {
      const json& vectors = field(space, "vectors", "space.");
      if (!vectors.is_array() || vectors.size() < 2) {
        throw ConfigError("space.vectors: expected an array of at least two vectors");
      }
      for (std::size_t k = 0; k < vectors.size(); ++k) {
        const std::string path = "space.vectors[" + std::to_string(k) + "]";
        if (!vectors[k].is_array() || vectors[k].empty()) {
          fail(path, "expected a nonempty array of complex coordinates");
        }
        std::vector<Complex> v;
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < vectors[k].size(); ++i) {
          v.push_back(complex_at(vectors[k][i], path + "[" + std::to_string(i) + "]"));
          norm_sq += std::norm(v.back());
        }
        if (!cfg.vectors.empty() && v.size() != cfg.vectors.front().size()) {
          fail(path, "all vectors must share one dimension");
        }
        if (std::sqrt(norm_sq) < ExplicitSequence::kZeroVectorThreshold) {
          fail(path, "zero vector cannot be normalized");
        }
        cfg.vectors.push_back(std::move(v));
      }
    }
  } else if (type == "tridiag_example") {
    cfg.space = SpaceKind::TridiagExample;
    if (space.contains("mode")) {
      const std::string mode = string_at(space["mode"], "space.mode");
      if (mode == "centered") {
        cfg.tridiag_centered = true;
      } else if (mode == "interleaved") {
        cfg.tridiag_centered = false;
      } else {
        throw ConfigError("space.mode: expected 'interleaved' or 'centered'");
      }
    }
    cfg.tridiag_count = cfg.section_sizes.back();
    if (space.contains("count")) {
      cfg.tridiag_count = count_at(space["count"], "space.count");
    }
    if (cfg.tridiag_count < 2) {
      throw ConfigError("space.count: at least two indices required");
    }
  } else {
    throw ConfigError("space.type: unknown space tag '" + type + "'");
  }

  const bool kernel_space = cfg.space == SpaceKind::Hardy ||
                            cfg.space == SpaceKind::DirichletAlpha ||
                            cfg.space == SpaceKind::DirichletMu;
  if (kernel_space) {
    cfg.points = parse_points(field(root, "points", ""), "points");
    if (cfg.points.size() < 2) {
      throw ConfigError("points: at least two points required");
    }
    if (cfg.space == SpaceKind::DirichletAlpha) {
      for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        for (std::size_t j = i; j < cfg.points.size(); ++j) {
          if (std::abs(std::conj(cfg.points[i]) * cfg.points[j]) > 0.995) {
            throw ConfigError("points: pair (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) +
                              ") too close to the boundary for dirichlet_alpha kernels");
          }
        }
      }
    }
  } else if (root.contains("points")) {
    throw ConfigError("points: only kernel spaces take a point sequence");
  }

  if (root.contains("cnp")) {
    if (!kernel_space) {
      throw ConfigError("cnp: the diagnostic applies to kernel spaces only");
    }
    const json& cnp = root["cnp"];
    if (!cnp.is_object()) throw ConfigError("cnp: expected an object");
    cfg.cnp_requested = true;
    cfg.cnp_omega0 = disc_point_at(field(cnp, "omega0", "cnp."), "cnp.omega0");
  }

  if (root.contains("output")) {
    const json& output = root["output"];
    if (!output.is_object()) throw ConfigError("output: expected an object");
    if (output.contains("dir")) cfg.out_dir = string_at(output["dir"], "output.dir");
  }
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) throw ConfigError("seed: expected an integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }

  return cfg;
}

}  // namespace framekit
