#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "framekit/errors.hpp"
#include "framekit/spectral.hpp"
#include "test_support.hpp"

using namespace framekit;
using namespace framekit::testing;

namespace {

// Brute-force eigenvalues of a 2x2 Hermitian matrix by the quadratic
// formula; the independent route for small singular-value checks.
std::pair<double, double> eig2_hermitian(Complex a, Complex b, Complex d) {
  const double tr = a.real() + d.real();
  const double det = a.real() * d.real() - std::norm(b);
  const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

HermitianMatrix unit_tridiagonal(std::size_t n) {
  std::vector<Complex> data(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    data[i * n + i] = 1.0;
    if (i + 1 < n) {
      data[i * n + i + 1] = 0.5;
      data[(i + 1) * n + i] = 0.5;
    }
  }
  return HermitianMatrix(n, data);
}

}  // namespace

TEST_CASE("eig_hermitian: identity") {
  const auto ev = eig_hermitian(HermitianMatrix::identity(3));
  REQUIRE(ev.size() == 3);
  for (double v : ev) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian: 2x2 unit-diagonal Gramian has eigenvalues 1 -+ |gamma|") {
  const HermitianMatrix m(2, {1.0, 0.5, 0.5, 1.0});
  const auto ev = eig_hermitian(m);
  CHECK(std::abs(ev[0] - 0.5) < 1e-12);
  CHECK(std::abs(ev[1] - 1.5) < 1e-12);
}

TEST_CASE("eig_hermitian: 3x3 tridiagonal closed form") {
  // Characteristic polynomial of tridiag(1; 1/2) at n=3 factors as
  // (1 - x)((1 - x)^2 - 1/2), hence 1 and 1 -+ sqrt(2)/2.
  const auto ev = eig_hermitian(unit_tridiagonal(3));
  CHECK(std::abs(ev[0] - (1.0 - std::numbers::sqrt2 / 2.0)) < 1e-10);
  CHECK(std::abs(ev[1] - 1.0) < 1e-10);
  CHECK(std::abs(ev[2] - (1.0 + std::numbers::sqrt2 / 2.0)) < 1e-10);
}

TEST_CASE("eig_hermitian: complex entries and eigenvector reconstruction") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 11);
    const HermitianMatrix m = random_hermitian(rng, n);
    const EigenDecomposition eig = eig_hermitian_full(m);

    REQUIRE(std::is_sorted(eig.values.begin(), eig.values.end()));
    const double scale = std::max(1.0, std::abs(eig.values.back()));

    // residual ||M v_k - lambda_k v_k||
    for (std::size_t k = 0; k < n; ++k) {
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * eig.vectors(j, k);
        acc -= eig.values[k] * eig.vectors(i, k);
        res += std::norm(acc);
      }
      CHECK(std::sqrt(res) < 1e-10 * scale);
    }
  }
}

TEST_CASE("eig_hermitian: eigenvalue sum equals trace") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 50);
    const HermitianMatrix m = random_hermitian(rng, n, 2.0);
    const auto ev = eig_hermitian(m);
    const double sum = std::accumulate(ev.begin(), ev.end(), 0.0);
    CHECK(std::abs(sum - m.trace()) < 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("eig_hermitian: Cauchy interlacing against the leading submatrix") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 19);
    const HermitianMatrix m = random_hermitian(rng, n);
    const auto outer = eig_hermitian(m);
    const auto inner = eig_hermitian(m.leading_section(n - 1));
    CHECK(outer.front() <= inner.front() + 1e-11);
    CHECK(inner.back() <= outer.back() + 1e-11);
  }
}

TEST_CASE("eig_hermitian: unit-diagonal PSD sections stay nonnegative") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 4 + static_cast<std::size_t>(rng() % 5);
    const std::size_t count = 2 + static_cast<std::size_t>(rng() % 12);
    const ExplicitSequence seq(d, random_unit_vectors(rng, d, count));
    const ExplicitGramianProvider provider(seq);
    const auto ev = eig_hermitian(provider.section(count));
    CHECK(ev.front() >= -1e-9);
    CHECK(ev.front() <= 1.0 + 1e-9);
    CHECK(ev.back() >= 1.0 - 1e-9);
  }
}

TEST_CASE("eig_hermitian: single entry") {
  const auto ev = eig_hermitian(HermitianMatrix(1, {Complex(-3.25, 0.0)}));
  CHECK(ev == std::vector<double>{-3.25});
}

TEST_CASE("HermitianMatrix: validation") {
  CHECK_THROWS_AS(HermitianMatrix(2, {1.0, Complex(0.5, 0.1), 0.5, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix(2, {1.0, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(
      HermitianMatrix(2, {Complex(1.0, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0),
                          Complex(std::nan(""), 0.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix(1, {Complex(1.0, 1e-3)}), std::invalid_argument);

  // within tolerance: symmetrized by averaging
  const HermitianMatrix m(2, {1.0, Complex(0.5, 4e-13), Complex(0.5, 0.0), 1.0});
  CHECK(m(0, 1) == std::conj(m(1, 0)));
  CHECK(m(0, 1).imag() == doctest::Approx(2e-13));
}

TEST_CASE("schur_row_bound: examples") {
  CHECK(schur_row_bound(HermitianMatrix::identity(4)) == 1.0);
  CHECK(schur_row_bound(unit_tridiagonal(5)) == 2.0);
  CHECK(schur_row_bound(HermitianMatrix(2, {1.0, 0.5, 0.5, 1.0})) == 1.5);
}

TEST_CASE("schur_row_bound dominates lambda_max") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 50);
    const HermitianMatrix m = random_hermitian(rng, n);
    CHECK(schur_row_bound(m) >= eig_hermitian(m).back() - 1e-11);
  }
}

TEST_CASE("singular_extremes: examples") {
  const auto id = singular_extremes(ComplexMatrix::identity(3));
  CHECK(id.sigma_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.sigma_max == doctest::Approx(1.0).epsilon(1e-12));

  const auto diag = singular_extremes(ComplexMatrix::diagonal({2.0, 0.5}));
  CHECK(diag.sigma_min == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(diag.sigma_max == doctest::Approx(2.0).epsilon(1e-12));

  // Antidiagonal [[0,2],[1,0]]: A^H A = diag(1, 4); cross-checked against
  // the quadratic-formula eigensolve of the product.
  const ComplexMatrix a(2, 2, {0.0, 2.0, 1.0, 0.0});
  const auto se = singular_extremes(a);
  const auto [lo, hi] = eig2_hermitian(1.0, 0.0, 4.0);
  CHECK(se.sigma_min == doctest::Approx(std::sqrt(lo)).epsilon(1e-12));
  CHECK(se.sigma_max == doctest::Approx(std::sqrt(hi)).epsilon(1e-12));
  CHECK(se.sigma_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(se.sigma_max == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("singular_extremes: input validation") {
  CHECK_THROWS_AS(singular_extremes(ComplexMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(
      singular_extremes(ComplexMatrix(1, 1, {Complex(1.0 / 0.0, 0.0)})),
      std::invalid_argument);
}

TEST_CASE("spectral_summary matches the eigensolve extremes") {
  std::mt19937_64 rng(106);
  const HermitianMatrix m = random_hermitian(rng, 9);
  const auto ev = eig_hermitian(m);
  const SpectralSummary s = spectral_summary(m);
  CHECK(s.n == 9);
  CHECK(s.lambda_min == ev.front());
  CHECK(s.lambda_max == ev.back());
}
