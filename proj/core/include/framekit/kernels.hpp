#ifndef FRAMEKIT_KERNELS_HPP
#define FRAMEKIT_KERNELS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "framekit/matrix.hpp"
#include "framekit/sequences.hpp"

namespace framekit {

/// Points with |lambda| > 1 - 5e-10 are rejected by every provided space:
/// that close to the circle the kernels blow up and the series stop
/// converging. The band is half a dyadic step below 2^-30 so radial
/// sequences 1 - 2^-n remain admissible through n = 30.
inline constexpr double kDiscBoundaryGuard = 5e-10;

void require_in_disc(Complex lambda);

/// A reproducing-kernel space on the unit disc. kernel(lambda, z) evaluates
/// k_lambda at z; it is conjugate-symmetric in its arguments and positive on
/// the diagonal.
class KernelSpace {
 public:
  virtual ~KernelSpace() = default;

  virtual Complex kernel(Complex lambda, Complex z) const = 0;
  virtual std::string name() const = 0;
};

/// Hardy space H^2: k_lambda(z) = 1 / (1 - conj(lambda) z).
class HardySpace final : public KernelSpace {
 public:
  Complex kernel(Complex lambda, Complex z) const override;
  std::string name() const override { return "hardy"; }
};

/// Squared monomial norm in the weighted Dirichlet space D_alpha with the
/// area measure normalized to total mass 1:
///   w_0 = 1,  w_n = n^2 Gamma(n) Gamma(2-alpha) / Gamma(n+2-alpha).
double dirichlet_weight(std::size_t n, double alpha);

/// Independent radial quadrature of the same norm integral,
/// n^2 * 2 int_0^1 r^{2n-1} (1-r^2)^{1-alpha} dr, on a dyadically graded
/// composite Gauss-Legendre rule. Accurate to well below 1e-8 for n <= 200.
double weight_quadrature_oracle(std::size_t n, double alpha);

/// Weighted Dirichlet space D_alpha, alpha in [0, 1]. The monomials are
/// orthogonal (the weight is radial), so the kernel is the diagonal power
/// series sum_n (conj(lambda) z)^n / w_n, summed until a geometric tail
/// bound drops below tol.
class DirichletAlphaSpace final : public KernelSpace {
 public:
  explicit DirichletAlphaSpace(double alpha, double tol = 1e-10,
                               std::size_t max_terms = 5000);

  Complex kernel(Complex lambda, Complex z) const override;
  std::string name() const override;

  double alpha() const { return alpha_; }

 private:
  double alpha_;
  double tol_;
  std::size_t max_terms_;
};

struct PointMass {
  Complex zeta;  // unimodular support point
  double c = 0.0;  // positive mass
};

/// A finite positive sum of point masses on the unit circle.
class PointMassMeasure {
 public:
  explicit PointMassMeasure(std::vector<PointMass> masses);

  const std::vector<PointMass>& masses() const { return masses_; }
  double total_mass() const;

 private:
  std::vector<PointMass> masses_;
};

/// Harmonic extension P_mu(z) = sum_j c_j (1 - |z|^2) / |zeta_j - z|^2.
double poisson_extension(Complex z, const PointMassMeasure& mu);

/// Monomial inner products of the harmonically weighted Dirichlet space
/// D(mu): <z^n, z^m> = delta_{n0} delta_{m0} + min(n,m) sum_j c_j zeta_j^{n-m}.
Complex dmu_gram_entry(std::size_t n, std::size_t m, const PointMassMeasure& mu);

/// Independent polar quadrature of the same inner product:
///   n m int_D z^{n-1} conj(z)^{m-1} P_mu(z) dA/pi  (+ the constant term).
/// Radial 200-point Gauss-Legendre; the angular trapezoid count grows like
/// 1/(1-r) per radius so the Poisson spike stays resolved at every node.
/// Accurate to well below 1e-6 for n, m <= 30.
Complex dmu_gram_oracle(std::size_t n, std::size_t m, const PointMassMeasure& mu);

/// Harmonically weighted Dirichlet space D(mu) over a monomial basis
/// truncated at the given degree. The Gram matrix and its inverse (via the
/// Hermitian eigensolver) are computed once at construction and read-only
/// afterwards; the kernel reproduces polynomials of degree <= truncation.
class DMuSpace final : public KernelSpace {
 public:
  static constexpr double kConditionLimit = 1e12;

  explicit DMuSpace(PointMassMeasure mu, std::size_t truncation = 40);

  Complex kernel(Complex lambda, Complex z) const override;
  std::string name() const override;

  /// Monomial coefficients c_j of z -> K(z, lambda), degree 0..truncation.
  std::vector<Complex> kernel_coefficients(Complex lambda) const;

  const PointMassMeasure& measure() const { return mu_; }
  std::size_t truncation() const { return truncation_; }
  double gram_condition() const { return condition_; }

 private:
  PointMassMeasure mu_;
  std::size_t truncation_;
  std::vector<double> gram_values_;
  ComplexMatrix gram_vectors_;
  double condition_;
};

/// <k^hat_a, k^hat_b> = kernel(a, b) / sqrt(kernel(a,a) kernel(b,b)).
Complex normalized_gram(const KernelSpace& space, Complex a, Complex b);

struct CnpDiagnostic {
  HermitianMatrix matrix;
  double lambda_min = 0.0;
  bool positive_semidefinite = false;
};

/// Samples the Nevanlinna-Pick positivity test function
///   F(lambda, z) = 1 - k_w0(z) k_lambda(w0) / (k_w0(w0) k_lambda(z))
/// on a point set and reports the smallest eigenvalue. The kernel must not
/// vanish at any sampled pair (checked); a PSD verdict uses a -1e-9 slack.
/// For the provided non-Hardy spaces this is a raw diagnostic: their
/// equivalent-norm renormalizations are not applied, so negative values do
/// not refute anything.
CnpDiagnostic cnp_matrix(const KernelSpace& space, Complex omega0,
                         std::span<const Complex> points);

/// Gramian of normalized reproducing kernels at a fixed point sequence.
class NormalizedKernelProvider final : public GramianProvider {
 public:
  NormalizedKernelProvider(std::shared_ptr<const KernelSpace> space,
                           std::vector<Complex> points);

  Complex entry(std::size_t n, std::size_t m) const override;
  bool normalized() const override { return true; }
  std::string name() const override;

  std::size_t size() const { return points_.size(); }
  const std::vector<Complex>& points() const { return points_; }
  const KernelSpace& space() const { return *space_; }

 private:
  std::shared_ptr<const KernelSpace> space_;
  std::vector<Complex> points_;
};

}  // namespace framekit

#endif  // FRAMEKIT_KERNELS_HPP
