#include "framekit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "framekit/errors.hpp"
#include "framekit/quadrature.hpp"
#include "framekit/spectral.hpp"

namespace framekit {

namespace {

// zeta^k for a (near-)unimodular zeta and any integer k.
Complex unit_power(Complex zeta, long long k) {
  Complex base = zeta;
  if (k < 0) {
    base = std::conj(zeta) / std::norm(zeta);
    k = -k;
  }
  Complex acc(1.0, 0.0);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::vector<Complex> monomial_powers(Complex z, std::size_t degree) {
  std::vector<Complex> e(degree + 1);
  e[0] = Complex(1.0, 0.0);
  for (std::size_t i = 1; i <= degree; ++i) e[i] = e[i - 1] * z;
  return e;
}

}  // namespace

void require_in_disc(Complex lambda) {
  if (!is_finite(lambda)) {
    throw std::invalid_argument("point has a non-finite coordinate");
  }
  if (std::abs(lambda) > 1.0 - kDiscBoundaryGuard) {
    throw std::invalid_argument("point lies outside the guarded open unit disc");
  }
}

Complex HardySpace::kernel(Complex lambda, Complex z) const {
  require_in_disc(lambda);
  require_in_disc(z);
  return 1.0 / (1.0 - std::conj(lambda) * z);
}

double dirichlet_weight(std::size_t n, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  return nd * nd *
         std::exp(std::lgamma(nd) + std::lgamma(2.0 - alpha) - std::lgamma(nd + 2.0 - alpha));
}

double weight_quadrature_oracle(std::size_t n, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (n > 200) throw std::invalid_argument("weight oracle supports n <= 200");
  if (n == 0) return 1.0;

  const QuadratureRule rule = dyadic_graded_gauss(32, 48);
  const double nd = static_cast<double>(n);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    integral += rule.weights[i] * std::pow(r, 2.0 * nd - 1.0) *
                std::pow(1.0 - r * r, 1.0 - alpha);
  }
  return nd * nd * 2.0 * integral;
}

DirichletAlphaSpace::DirichletAlphaSpace(double alpha, double tol, std::size_t max_terms)
    : alpha_(alpha), tol_(tol), max_terms_(max_terms) {
  if (alpha_ < 0.0 || alpha_ > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (tol_ <= 0.0) throw std::invalid_argument("series tolerance must be positive");
  if (max_terms_ == 0) throw std::invalid_argument("max_terms must be positive");
}

Complex DirichletAlphaSpace::kernel(Complex lambda, Complex z) const {
  require_in_disc(lambda);
  require_in_disc(z);
  const Complex x = std::conj(lambda) * z;
  const double ax = std::abs(x);
  if (ax > 0.995) {
    throw std::invalid_argument("points too close to the boundary: |conj(lambda) z| > 0.995");
  }
  Complex sum(1.0, 0.0);
  if (ax == 0.0) return sum;

  Complex x_pow(1.0, 0.0);
  double ax_pow = 1.0;
  for (std::size_t n = 1; n <= max_terms_; ++n) {
    x_pow *= x;
    ax_pow *= ax;
    sum += x_pow / dirichlet_weight(n, alpha_);
    // The weights increase in n, so the tail is dominated by a geometric
    // series with ratio |x| starting from the next weight.
    const double tail = ax_pow * ax / (dirichlet_weight(n + 1, alpha_) * (1.0 - ax));
    if (tail < tol_) return sum;
  }
  throw NumericalError("Dirichlet kernel series did not converge within " +
                       std::to_string(max_terms_) + " terms");
}

std::string DirichletAlphaSpace::name() const {
  return "dirichlet_alpha(" + std::to_string(alpha_) + ")";
}

PointMassMeasure::PointMassMeasure(std::vector<PointMass> masses)
    : masses_(std::move(masses)) {
  if (masses_.empty()) throw std::invalid_argument("measure needs at least one point mass");
  for (std::size_t j = 0; j < masses_.size(); ++j) {
    if (!is_finite(masses_[j].zeta) || !std::isfinite(masses_[j].c)) {
      throw std::invalid_argument("point mass " + std::to_string(j + 1) + " is not finite");
    }
    if (std::abs(std::abs(masses_[j].zeta) - 1.0) > 1e-12) {
      throw std::invalid_argument("support point " + std::to_string(j + 1) +
                                  " is not unimodular");
    }
    if (masses_[j].c <= 0.0) {
      throw std::invalid_argument("mass " + std::to_string(j + 1) + " must be positive");
    }
  }
}

double PointMassMeasure::total_mass() const {
  double s = 0.0;
  for (const PointMass& pm : masses_) s += pm.c;
  return s;
}

double poisson_extension(Complex z, const PointMassMeasure& mu) {
  require_in_disc(z);
  const double one_minus = 1.0 - std::norm(z);
  double s = 0.0;
  for (const PointMass& pm : mu.masses()) {
    s += pm.c * one_minus / std::norm(pm.zeta - z);
  }
  return s;
}

Complex dmu_gram_entry(std::size_t n, std::size_t m, const PointMassMeasure& mu) {
  if (n == 0 && m == 0) return Complex(1.0, 0.0);
  if (n == 0 || m == 0) return Complex(0.0, 0.0);
  const long long k = static_cast<long long>(n) - static_cast<long long>(m);
  Complex s(0.0, 0.0);
  for (const PointMass& pm : mu.masses()) s += pm.c * unit_power(pm.zeta, k);
  return static_cast<double>(std::min(n, m)) * s;
}

Complex dmu_gram_oracle(std::size_t n, std::size_t m, const PointMassMeasure& mu) {
  if (n > 30 || m > 30) throw std::invalid_argument("Gram oracle supports n, m <= 30");
  if (n == 0 || m == 0) {
    // The integrand carries a factor n*m, so only the constant term is left.
    return (n == 0 && m == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  }

  const QuadratureRule radial = gauss_legendre(200, 0.0, 1.0);
  const int k = static_cast<int>(n) - static_cast<int>(m);
  const double pow_exp = static_cast<double>(n + m) - 1.0;
  const std::vector<PointMass>& masses = mu.masses();

  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = radial.nodes[i];
    // A fixed angular count aliases the Poisson spike once 1/(1-r) exceeds
    // it; growing the count with the radius keeps the rule exact in effect.
    const std::size_t count = std::max<std::size_t>(
        512, static_cast<std::size_t>(std::ceil(34.0 / (1.0 - r))) + 96);
    const double step_angle = 2.0 * std::numbers::pi / static_cast<double>(count);
    const Complex step = std::polar(1.0, step_angle);
    const Complex phase_step = std::polar(1.0, k * step_angle);
    const double one_minus = 1.0 - r * r;

    Complex z(r, 0.0);
    Complex phase(1.0, 0.0);
    Complex angular(0.0, 0.0);
    for (std::size_t j = 0; j < count; ++j) {
      double p = 0.0;
      for (const PointMass& pm : masses) p += pm.c / std::norm(pm.zeta - z);
      angular += phase * (p * one_minus);
      z *= step;
      phase *= phase_step;
    }
    angular /= static_cast<double>(count);
    total += radial.weights[i] * 2.0 * std::pow(r, pow_exp) * angular;
  }
  return static_cast<double>(n) * static_cast<double>(m) * total;
}

DMuSpace::DMuSpace(PointMassMeasure mu, std::size_t truncation)
    : mu_(std::move(mu)),
      truncation_(truncation),
      gram_vectors_(0, 0),
      condition_(0.0) {
  if (truncation_ == 0 || truncation_ > 200) {
    throw std::invalid_argument("truncation degree must lie in [1, 200]");
  }
  const std::size_t n = truncation_ + 1;
  std::vector<Complex> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex v = dmu_gram_entry(i, j, mu_);
      g[i * n + j] = v;
      g[j * n + i] = std::conj(v);
    }
  }
  EigenDecomposition eig = eig_hermitian_full(HermitianMatrix(n, g));
  const double lo = eig.values.front();
  const double hi = eig.values.back();
  if (lo <= 0.0) {
    throw NumericalError("D(mu) Gram matrix is not positive definite at truncation " +
                         std::to_string(truncation_));
  }
  condition_ = hi / lo;
  if (condition_ > kConditionLimit) {
    throw NumericalError("D(mu) Gram matrix is ill-conditioned (estimate " +
                         std::to_string(condition_) + ")");
  }
  gram_values_ = std::move(eig.values);
  gram_vectors_ = std::move(eig.vectors);
}

Complex DMuSpace::kernel(Complex lambda, Complex z) const {
  require_in_disc(lambda);
  require_in_disc(z);
  const std::vector<Complex> el = monomial_powers(lambda, truncation_);
  const std::vector<Complex> ez = monomial_powers(z, truncation_);
  const std::size_t n = truncation_ + 1;
  // K(z, lambda) = e(lambda)^H G^{-1} e(z) through the eigendecomposition.
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    Complex vl(0.0, 0.0);
    Complex vz(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = std::conj(gram_vectors_(i, k));
      vl += vik * el[i];
      vz += vik * ez[i];
    }
    acc += std::conj(vl) * vz / gram_values_[k];
  }
  return acc;
}

std::vector<Complex> DMuSpace::kernel_coefficients(Complex lambda) const {
  require_in_disc(lambda);
  const std::vector<Complex> el = monomial_powers(lambda, truncation_);
  const std::size_t n = truncation_ + 1;
  std::vector<Complex> coeffs(n, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    Complex vl(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) vl += std::conj(gram_vectors_(i, k)) * el[i];
    const Complex scale = std::conj(vl) / gram_values_[k];
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[j] += scale * std::conj(gram_vectors_(j, k));
    }
  }
  return coeffs;
}

std::string DMuSpace::name() const {
  return "dirichlet_mu[" + std::to_string(mu_.masses().size()) + " masses, N=" +
         std::to_string(truncation_) + "]";
}

Complex normalized_gram(const KernelSpace& space, Complex a, Complex b) {
  const Complex kaa = space.kernel(a, a);
  const Complex kbb = space.kernel(b, b);
  if (kaa.real() <= 0.0 || kbb.real() <= 0.0) {
    throw NumericalError("kernel diagonal is not positive; space is invalid");
  }
  const Complex kab = space.kernel(a, b);
  return kab / std::sqrt(kaa.real() * kbb.real());
}

CnpDiagnostic cnp_matrix(const KernelSpace& space, Complex omega0,
                         std::span<const Complex> points) {
  require_in_disc(omega0);
  if (points.empty()) throw std::invalid_argument("cnp_matrix needs at least one point");
  for (const Complex& p : points) require_in_disc(p);

  const Complex k00 = space.kernel(omega0, omega0);
  if (k00.real() <= 0.0) {
    throw NumericalError("kernel diagonal is not positive at omega0");
  }

  const std::size_t n = points.size();
  std::vector<Complex> f(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex k_lambda_w0 = space.kernel(points[i], omega0);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex k_w0_z = space.kernel(omega0, points[j]);
      const Complex k_lambda_z = space.kernel(points[i], points[j]);
      if (std::abs(k_lambda_z) < 1e-14) {
        throw NumericalError("kernel vanishes at sampled pair (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) +
                             "): nonvanishing condition violated");
      }
      f[i * n + j] = 1.0 - (k_w0_z * k_lambda_w0) / (k00 * k_lambda_z);
    }
  }

  // Kernel conjugate-symmetry makes F Hermitian up to evaluation error;
  // average the halves before handing it to the strict constructor.
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      asym = std::max(asym, std::abs(f[i * n + j] - std::conj(f[j * n + i])));
      const Complex avg = (f[i * n + j] + std::conj(f[j * n + i])) * 0.5;
      f[i * n + j] = (i == j) ? Complex(avg.real(), 0.0) : avg;
      f[j * n + i] = std::conj(f[i * n + j]);
    }
  }
  if (asym > 1e-8) {
    throw NumericalError("sampled Pick matrix is not Hermitian within tolerance");
  }

  CnpDiagnostic diag{HermitianMatrix(n, f), 0.0, false};
  diag.lambda_min = eig_hermitian(diag.matrix).front();
  diag.positive_semidefinite = diag.lambda_min >= -1e-9;
  return diag;
}

NormalizedKernelProvider::NormalizedKernelProvider(
    std::shared_ptr<const KernelSpace> space, std::vector<Complex> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (!space_) throw std::invalid_argument("kernel space must not be null");
  if (points_.empty()) throw std::invalid_argument("point sequence must be nonempty");
  for (const Complex& p : points_) require_in_disc(p);
}

Complex NormalizedKernelProvider::entry(std::size_t n, std::size_t m) const {
  if (n == 0 || n > points_.size() || m == 0 || m > points_.size()) {
    throw std::invalid_argument("provider index out of range");
  }
  return normalized_gram(*space_, points_[n - 1], points_[m - 1]);
}

std::string NormalizedKernelProvider::name() const {
  return space_->name() + " normalized kernels";
}

}  // namespace framekit
