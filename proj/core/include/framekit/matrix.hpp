#ifndef FRAMEKIT_MATRIX_HPP
#define FRAMEKIT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace framekit {

using Complex = std::complex<double>;

inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Dense row-major complex matrix. Just enough surface to move vector
/// sequences around and to form adjoint products.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix multiply(const ComplexMatrix& rhs) const;
  std::vector<Complex> apply(std::span<const Complex> x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Dense N x N complex Hermitian matrix (a finite Gramian section).
///
/// Construction validates finiteness and Hermitian symmetry to 1e-12
/// absolute, then stores the averaged (exactly Hermitian) entries.
/// Diagonal imaginary parts within tolerance are dropped.
class HermitianMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  HermitianMatrix(std::size_t n, const std::vector<Complex>& entries);

  static HermitianMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<Complex>& data() const { return data_; }

  HermitianMatrix leading_section(std::size_t k) const;
  HermitianMatrix entrywise_abs() const;

  double frobenius_norm() const;
  double trace() const;

 private:
  struct Unchecked {};
  HermitianMatrix(std::size_t n, std::vector<Complex> data, Unchecked);

  std::size_t n_;
  std::vector<Complex> data_;
};

/// Extreme eigenvalues of one finite section.
struct SpectralSummary {
  std::size_t n = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

}  // namespace framekit

#endif  // FRAMEKIT_MATRIX_HPP
