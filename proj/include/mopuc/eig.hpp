#pragma once

#include <vector>

#include "mopuc/cmat.hpp"

namespace mopuc {

// Eigendecomposition A = V diag(lambda) V* of a Hermitian matrix.
// Eigenvalues ascending, V unitary with eigenvectors as columns.
struct SpectralDecomp {
  std::vector<double> eigenvalues;
  CMat eigenvectors;
};

// Cyclic complex Jacobi iteration. Requires the Hermitian defect of A to be
// at most 1e-10 * (1 + |A|); the input is symmetrized before iterating.
// Converges when the off-diagonal Frobenius mass drops below 1e-14 * |A|_F;
// throws NoConvergence after 30 * p^2 sweeps.
SpectralDecomp eig_hermitian(const CMat& a);

// Gauss-Jordan elimination with partial pivoting. Throws SingularMatrix when
// a pivot falls below 1e-14 * |A|_F.
CMat inverse(const CMat& a);

// Hermitian PSD square root via the eigendecomposition. Eigenvalues in
// [-1e-12 * (1 + |A|_2), 0) are clamped to zero; anything below that window
// throws NotPsd. psd_sqrt(identity) == identity exactly.
CMat psd_sqrt(const CMat& a);

// Inverse of psd_sqrt computed spectrally (1/sqrt(lambda) per eigenvalue).
// Same clamp window as psd_sqrt; a clamped (zero) eigenvalue throws
// SingularMatrix since the inverse does not exist.
CMat psd_inverse_sqrt(const CMat& a);

// Singular values sigma_i = sqrt(lambda_i(A A*)), descending.
std::vector<double> singular_values(const CMat& a);

// Largest singular value. spectral_norm(0) == 0.
double spectral_norm(const CMat& a);

// True when |A A* - I|_2 <= tol.
bool is_unitary(const CMat& a, double tol = 1e-10);

}  // namespace mopuc
