#include "framekit/sequences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "framekit/errors.hpp"
#include "framekit/spectral.hpp"

namespace framekit {

Complex inner_product(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * std::conj(v[i]);
  return acc;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ExplicitSequence::ExplicitSequence(std::size_t dimension,
                                   std::vector<std::vector<Complex>> vectors)
    : dimension_(dimension), vectors_(std::move(vectors)) {
  if (dimension_ == 0) throw std::invalid_argument("sequence dimension must be positive");
  for (std::size_t n = 0; n < vectors_.size(); ++n) {
    if (vectors_[n].size() != dimension_) {
      throw std::invalid_argument("vector " + std::to_string(n + 1) +
                                  " does not match the sequence dimension");
    }
    for (const Complex& x : vectors_[n]) {
      if (!is_finite(x)) {
        throw std::invalid_argument("vector " + std::to_string(n + 1) +
                                    " has a non-finite coordinate");
      }
    }
  }
}

const std::vector<Complex>& ExplicitSequence::vector(std::size_t n) const {
  if (n == 0 || n > vectors_.size()) {
    throw std::invalid_argument("sequence index out of range");
  }
  return vectors_[n - 1];
}

ExplicitSequence ExplicitSequence::normalize() const {
  std::vector<std::vector<Complex>> out(vectors_.size());
  for (std::size_t n = 0; n < vectors_.size(); ++n) {
    const double norm = vector_norm(vectors_[n]);
    if (norm < kZeroVectorThreshold) {
      throw std::invalid_argument("zero vector at index " + std::to_string(n + 1));
    }
    out[n].resize(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) out[n][i] = vectors_[n][i] / norm;
  }
  return ExplicitSequence(dimension_, std::move(out));
}

bool ExplicitSequence::is_normalized(double tol) const {
  for (const auto& v : vectors_) {
    if (std::abs(vector_norm(v) - 1.0) > tol) return false;
  }
  return true;
}

Complex ExplicitSequence::gram_entry(std::size_t n, std::size_t m) const {
  return inner_product(vector(n), vector(m));
}

std::vector<Complex> ExplicitSequence::synthesis(std::span<const Complex> coeffs) const {
  if (coeffs.size() > vectors_.size()) {
    throw std::invalid_argument("coefficient list longer than the sequence");
  }
  std::vector<Complex> out(dimension_, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (std::size_t i = 0; i < dimension_; ++i) out[i] += coeffs[k] * vectors_[k][i];
  }
  return out;
}

std::vector<Complex> ExplicitSequence::analysis_coeffs(std::span<const Complex> x) const {
  if (x.size() != dimension_) {
    throw std::invalid_argument("analysis vector dimension mismatch");
  }
  std::vector<Complex> out(vectors_.size());
  for (std::size_t n = 0; n < vectors_.size(); ++n) {
    out[n] = inner_product(x, vectors_[n]);
  }
  return out;
}

ExplicitSequence ExplicitSequence::apply_invertible(const ComplexMatrix& a) const {
  if (a.rows() != dimension_ || a.cols() != dimension_) {
    throw std::invalid_argument("operator shape does not match the sequence dimension");
  }
  if (singular_extremes(a).sigma_min <= 1e-12) {
    throw NumericalError("operator is numerically singular");
  }
  std::vector<std::vector<Complex>> out(vectors_.size());
  for (std::size_t n = 0; n < vectors_.size(); ++n) {
    out[n] = a.apply(vectors_[n]);
  }
  return ExplicitSequence(dimension_, std::move(out));
}

HermitianMatrix GramianProvider::section(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("section size must be positive");
  std::vector<Complex> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data[i * n + j] = entry(i + 1, j + 1);
  }
  return HermitianMatrix(n, data);
}

HermitianMatrix GramianProvider::section(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw std::invalid_argument("section index list must be nonempty");
  const std::size_t n = indices.size();
  std::vector<Complex> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data[i * n + j] = entry(indices[i], indices[j]);
  }
  return HermitianMatrix(n, data);
}

ExplicitGramianProvider::ExplicitGramianProvider(ExplicitSequence sequence)
    : sequence_(std::move(sequence)), normalized_(sequence_.is_normalized()) {}

Complex ExplicitGramianProvider::entry(std::size_t n, std::size_t m) const {
  return sequence_.gram_entry(n, m);
}

long long interleave_to_z(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sequence indices are 1-based");
  if (n % 2 == 0) return static_cast<long long>(n / 2);
  return -static_cast<long long>((n - 1) / 2);
}

namespace {

Complex tridiag_rule(long long distance) {
  if (distance == 0) return Complex(1.0, 0.0);
  if (distance == 1 || distance == -1) return Complex(0.5, 0.0);
  return Complex(0.0, 0.0);
}

}  // namespace

Complex tridiag_entry(std::size_t n, std::size_t m) {
  return tridiag_rule(interleave_to_z(n) - interleave_to_z(m));
}

double phi_fourier_oracle(int k) {
  if (k < -64 || k > 64) {
    throw std::invalid_argument("phi_fourier_oracle supports |k| <= 64");
  }
  constexpr std::size_t kNodes = 512;
  double acc = 0.0;
  for (std::size_t j = 0; j < kNodes; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / kNodes;
    acc += (1.0 + std::cos(t)) * std::cos(k * t);
  }
  return acc / kNodes;
}

Complex TridiagExampleProvider::entry(std::size_t n, std::size_t m) const {
  if (n == 0 || m == 0) throw std::invalid_argument("sequence indices are 1-based");
  if (mode_ == Mode::Interleaved) return tridiag_entry(n, m);
  return tridiag_rule(static_cast<long long>(n) - static_cast<long long>(m));
}

std::string TridiagExampleProvider::name() const {
  return mode_ == Mode::Interleaved ? "tridiag_example[interleaved]"
                                    : "tridiag_example[centered]";
}

}  // namespace framekit
