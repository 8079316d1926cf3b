#include "framekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

constexpr double kOffDiagonalFactor = 1e-13;
constexpr std::size_t kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<Complex>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s += 2.0 * std::norm(a[i * n + j]);
    }
  }
  return std::sqrt(s);
}

EigenDecomposition jacobi_solve(const HermitianMatrix& m, bool want_vectors) {
  const std::size_t n = m.dim();
  std::vector<Complex> a = m.data();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix(0, 0);

  const double fro0 = m.frobenius_norm();
  bool converged = false;
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= kOffDiagonalFactor * fro0) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        // Factor out the phase so the (p,q) block becomes real symmetric,
        // then apply the classic rotation that annihilates the pivot.
        const Complex u = std::conj(apq) / r;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a[k * n + p];
          const Complex akq = a[k * n + q];
          a[k * n + p] = c * akp - s * u * akq;
          a[k * n + q] = s * akp + c * u * akq;
        }
        const Complex uc = std::conj(u);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a[p * n + k];
          const Complex aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * uc * aqk;
          a[q * n + k] = s * apk + c * uc * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = Complex(a[p * n + p].real(), 0.0);
        a[q * n + q] = Complex(a[q * n + q].real(), 0.0);

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * u * vkq;
            v(k, q) = s * vkp + c * u * vkq;
          }
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a, n) > kOffDiagonalFactor * fro0) {
    throw NumericalError("Jacobi eigensolver did not converge within 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(0, 0)};
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[order[k] * n + order[k]].real();
  if (want_vectors) {
    ComplexMatrix sorted(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sorted(i, k) = v(i, order[k]);
    }
    out.vectors = std::move(sorted);
  }
  return out;
}

}  // namespace

std::vector<double> eig_hermitian(const HermitianMatrix& m) {
  return jacobi_solve(m, false).values;
}

EigenDecomposition eig_hermitian_full(const HermitianMatrix& m) {
  return jacobi_solve(m, true);
}

double schur_row_bound(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(m(i, j));
    bound = std::max(bound, row);
  }
  return bound;
}

SingularExtremes singular_extremes(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("singular_extremes expects a square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("singular_extremes expects a nonempty matrix");

  // A^H A assembled in mirrored halves, so the product is exactly Hermitian.
  std::vector<Complex> b(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(a(k, i)) * a(k, j);
      if (i == j) acc = Complex(acc.real(), 0.0);
      b[i * n + j] = acc;
      b[j * n + i] = std::conj(acc);
    }
  }
  const std::vector<double> ev = eig_hermitian(HermitianMatrix(n, b));
  const double lo = std::max(ev.front(), 0.0);
  const double hi = std::max(ev.back(), 0.0);
  return SingularExtremes{std::sqrt(lo), std::sqrt(hi)};
}

SpectralSummary spectral_summary(const HermitianMatrix& m) {
  const std::vector<double> ev = eig_hermitian(m);
  return SpectralSummary{m.dim(), ev.front(), ev.back()};
}

}  // namespace framekit
