#ifndef FRAMEKIT_SEQUENCES_HPP
#define FRAMEKIT_SEQUENCES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

/// Inner product, linear in the first argument and conjugate-linear in the
/// second. Every Gramian in this library follows this convention.
Complex inner_product(std::span<const Complex> u, std::span<const Complex> v);

double vector_norm(std::span<const Complex> v);

/// A finite sequence of vectors in C^d, 1-based like the Gramians built
/// from it.
class ExplicitSequence {
 public:
  static constexpr double kZeroVectorThreshold = 1e-14;

  ExplicitSequence(std::size_t dimension, std::vector<std::vector<Complex>> vectors);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<Complex>& vector(std::size_t n) const;

  /// Divides every vector by its norm. Vectors with norm below 1e-14 raise
  /// std::invalid_argument naming the 1-based index.
  ExplicitSequence normalize() const;
  bool is_normalized(double tol = 1e-12) const;

  /// <x_n, x_m>, 1-based.
  Complex gram_entry(std::size_t n, std::size_t m) const;

  /// sum a_k x_k over the leading coefficients; coeffs may be shorter than
  /// the sequence but not longer.
  std::vector<Complex> synthesis(std::span<const Complex> coeffs) const;

  /// n-th output is <x, x_n>.
  std::vector<Complex> analysis_coeffs(std::span<const Complex> x) const;

  /// Images (A x_n). A must be d x d with sigma_min > 1e-12; callers that
  /// care about Gramians typically re-normalize the result.
  ExplicitSequence apply_invertible(const ComplexMatrix& a) const;

 private:
  std::size_t dimension_;
  std::vector<std::vector<Complex>> vectors_;
};

/// Lazy infinite Gramian: entry(n, m) for any 1-based indices. Entries are
/// conjugate-symmetric; normalized providers have unit diagonal. Providers
/// are immutable after construction and safe to query concurrently.
class GramianProvider {
 public:
  virtual ~GramianProvider() = default;

  virtual Complex entry(std::size_t n, std::size_t m) const = 0;
  virtual bool normalized() const = 0;
  virtual std::string name() const = 0;

  /// Leading n x n finite section.
  HermitianMatrix section(std::size_t n) const;

  /// Finite section over an explicit list of 1-based indices.
  HermitianMatrix section(std::span<const std::size_t> indices) const;
};

/// Gramian of an explicit vector sequence.
class ExplicitGramianProvider final : public GramianProvider {
 public:
  explicit ExplicitGramianProvider(ExplicitSequence sequence);

  Complex entry(std::size_t n, std::size_t m) const override;
  bool normalized() const override { return normalized_; }
  std::string name() const override { return "explicit_vectors"; }

  const ExplicitSequence& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

 private:
  ExplicitSequence sequence_;
  bool normalized_;
};

/// Maps 1,2,3,4,5,... onto the integers 0,1,-1,2,-2,...
long long interleave_to_z(std::size_t n);

/// Unit-diagonal tridiagonal-over-Z Gramian entry at the interleaved images
/// of (n, m): 1 on the diagonal, 1/2 at Z-distance one, 0 beyond.
Complex tridiag_entry(std::size_t n, std::size_t m);

/// Fourier coefficient (1/2pi) int_0^2pi (1 + cos t) e^{ikt} dt by the
/// 512-node periodic trapezoid rule; exact for this trigonometric
/// polynomial to well below 1e-12. Requires |k| <= 64.
double phi_fourier_oracle(int k);

/// The separated-but-not-Riesz example: a Z-indexed tridiagonal Gramian
/// exposed over N. Interleaved mode uses the bijection above; centered mode
/// presents sections as contiguous Z-blocks, so the leading N x N section is
/// exactly the tridiagonal Toeplitz matrix the closed-form spectrum speaks
/// about. The two modes' sections are permutation-similar.
class TridiagExampleProvider final : public GramianProvider {
 public:
  enum class Mode { Interleaved, Centered };

  explicit TridiagExampleProvider(Mode mode = Mode::Interleaved) : mode_(mode) {}

  Complex entry(std::size_t n, std::size_t m) const override;
  bool normalized() const override { return true; }
  std::string name() const override;

  Mode mode() const { return mode_; }

 private:
  Mode mode_;
};

}  // namespace framekit

#endif  // FRAMEKIT_SEQUENCES_HPP
