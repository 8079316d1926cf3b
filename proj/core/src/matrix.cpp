#include "framekit/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace framekit {

namespace {

void require_finite(Complex v, std::size_t i, std::size_t j) {
  if (!is_finite(v)) {
    throw std::invalid_argument("matrix entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not finite");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix data size does not match dimensions");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      require_finite((*this)(i, j), i, j);
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += aik * rhs(k, j);
      }
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<Complex> y(rows_, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<Complex> data, Unchecked)
    : n_(n), data_(std::move(data)) {}

HermitianMatrix::HermitianMatrix(std::size_t n, const std::vector<Complex>& entries)
    : n_(n), data_(entries) {
  if (n_ == 0) throw std::invalid_argument("Hermitian matrix dimension must be positive");
  if (data_.size() != n_ * n_) {
    throw std::invalid_argument("Hermitian matrix data size does not match dimension");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const Complex aij = data_[i * n_ + j];
      const Complex aji = data_[j * n_ + i];
      require_finite(aij, i, j);
      if (i == j) {
        if (std::abs(aij.imag()) > kSymmetryTolerance) {
          throw std::invalid_argument("diagonal entry (" + std::to_string(i) +
                                      ") has non-real part beyond tolerance");
        }
        data_[i * n_ + i] = Complex(aij.real(), 0.0);
        continue;
      }
      require_finite(aji, j, i);
      if (std::abs(aij - std::conj(aji)) > kSymmetryTolerance) {
        throw std::invalid_argument("matrix is not Hermitian at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
      const Complex avg = (aij + std::conj(aji)) * 0.5;
      data_[i * n_ + j] = avg;
      data_[j * n_ + i] = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  std::vector<Complex> d(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1.0;
  return HermitianMatrix(n, std::move(d), Unchecked{});
}

HermitianMatrix HermitianMatrix::leading_section(std::size_t k) const {
  if (k == 0 || k > n_) {
    throw std::invalid_argument("leading section size out of range");
  }
  std::vector<Complex> d(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) d[i * k + j] = (*this)(i, j);
  }
  return HermitianMatrix(k, std::move(d), Unchecked{});
}

HermitianMatrix HermitianMatrix::entrywise_abs() const {
  std::vector<Complex> d(n_ * n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) d[i] = std::abs(data_[i]);
  return HermitianMatrix(n_, std::move(d), Unchecked{});
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double HermitianMatrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i).real();
  return s;
}

}  // namespace framekit
