#include "framekit/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "framekit/errors.hpp"

namespace framekit {

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quadrature rule needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and its derivative.
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  QuadratureRule base = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    base.nodes[i] = mid + hw * base.nodes[i];
    base.weights[i] *= hw;
  }
  return base;
}

QuadratureRule dyadic_graded_gauss(std::size_t points_per_panel, std::size_t panels) {
  if (points_per_panel == 0 || panels == 0) {
    throw std::invalid_argument("graded rule needs positive panel counts");
  }
  QuadratureRule out;
  out.nodes.reserve(points_per_panel * panels);
  out.weights.reserve(points_per_panel * panels);
  double left = 0.0;
  for (std::size_t j = 0; j < panels; ++j) {
    const double right = (j + 1 == panels) ? 1.0 : 1.0 - std::ldexp(1.0, -static_cast<int>(j + 1));
    const QuadratureRule panel = gauss_legendre(points_per_panel, left, right);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
    left = right;
  }
  return out;
}

}  // namespace framekit
