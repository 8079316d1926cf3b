#ifndef FRAMEKIT_SPECTRAL_HPP
#define FRAMEKIT_SPECTRAL_HPP

#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, k-th column pairs with values[k]
};

/// Eigenvalues of a complex Hermitian matrix, ascending, repeated values
/// kept. Cyclic Jacobi rotations; converged once the off-diagonal Frobenius
/// norm drops below 1e-13 times the Frobenius norm of the input, hard cap
/// 100 sweeps (NumericalError beyond that).
std::vector<double> eig_hermitian(const HermitianMatrix& m);

/// Same solver, also accumulating the eigenvectors.
EigenDecomposition eig_hermitian_full(const HermitianMatrix& m);

/// Max over rows of the sum of entry moduli (Schur test). A certified upper
/// bound for the largest eigenvalue modulus of a Hermitian matrix.
double schur_row_bound(const HermitianMatrix& m);

struct SingularExtremes {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Extreme singular values of a square complex matrix, via the eigenvalues
/// of the adjoint product.
SingularExtremes singular_extremes(const ComplexMatrix& a);

/// (lambda_min, lambda_max) of one Hermitian section.
SpectralSummary spectral_summary(const HermitianMatrix& m);

}  // namespace framekit

#endif  // FRAMEKIT_SPECTRAL_HPP
