#ifndef FRAMEKIT_QUADRATURE_HPP
#define FRAMEKIT_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace framekit {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1]. Nodes by Newton iteration on the
/// Legendre recurrence; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(std::size_t n);

/// Gauss-Legendre rule mapped onto [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// Composite Gauss-Legendre on [0, 1] with panels graded dyadically toward 1
/// (breakpoints 1 - 2^-j). Resolves integrands with algebraic endpoint
/// behaviour or sharp concentration near 1.
QuadratureRule dyadic_graded_gauss(std::size_t points_per_panel, std::size_t panels);

}  // namespace framekit

#endif  // FRAMEKIT_QUADRATURE_HPP
