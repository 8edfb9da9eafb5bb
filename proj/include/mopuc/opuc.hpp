#pragma once

#include <vector>

#include "mopuc/measure.hpp"

namespace mopuc {

// How the orthonormal family is pinned down. Orthonormality fixes each phi_n
// only up to a constant unitary factor; the two constructions here differ by
// exactly such factors.
enum class Normalization { kRecurrence, kHpd };

// Left and right orthonormal families up to degree n_max plus the reflection
// coefficients H_1..H_{n_max} that couple them. phi_left[n] and phi_right[n]
// have formal degree n; every |H_n|_2 < 1.
struct OpucSystem {
  int p = 0;
  int n_max = 0;
  Normalization normalization = Normalization::kRecurrence;
  std::vector<MatPoly> phi_left;
  std::vector<MatPoly> phi_right;
  std::vector<CMat> reflections;

  const MatPoly& left(int n) const { return phi_left.at(static_cast<std::size_t>(n)); }
  const MatPoly& right(int n) const { return phi_right.at(static_cast<std::size_t>(n)); }
  // H_n, 1-based as in the three-term theory.
  const CMat& reflection(int n) const { return reflections.at(static_cast<std::size_t>(n) - 1); }
};

// Block-Toeplitz Gram solve per degree; leading coefficients come out HPD.
// Throws DegenerateMeasure when a Cholesky pivot of a Gram section falls to
// 1e-12 * |mu_0|_2 or below.
std::vector<MatPoly> gram_schmidt_left(const MomentTable& t, int n_max);
std::vector<MatPoly> gram_schmidt_right(const MomentTable& t, int n_max);

// H_n from the extreme coefficients of the degree-n pair (right K, left L):
// H_n = (L_nn^*)^{-1} K_n0, which equals L_n0 (K_nn^*)^{-1} exactly when the
// compatibility identity L_n0^* L_nn = K_nn K_n0^* holds; IncompatiblePair
// when it fails beyond 1e-9 relative to coefficient scale.
CMat reflection_from_coeffs(const MatPoly& phi_left_n, const MatPoly& phi_right_n);

// H_{n+1} = -<z phi_n^L, reverse(phi_n^R)>_L, evaluated through the moment
// table. Matches reflection_from_coeffs exactly (as a matrix) in the
// recurrence normalization, and up to left/right unitary factors otherwise.
CMat reflection_from_moments(const MatPoly& phi_left_n, const MatPoly& phi_right_n,
                             const MomentTable& t);

// Canonical construction (recurrence normalization): phi_0 = mu_0^{-1/2},
// Szego step upward with H_{n+1} extracted from moments. Requires the table
// to reach order 2 * n_max + 2. Verifies orthonormality of the full family
// against a conditioning-aware tolerance -- 1e-9 when the leading
// coefficients stay O(1), relaxed by kappa_max^4 otherwise -- and throws
// NumericalError on drift beyond it.
OpucSystem build_system(const MomentTable& t, int n_max);
OpucSystem build_system(const MatMeasure& rho, int n_max);

// Both Gram-Schmidt families with HPD leading coefficients; reflections via
// reflection_from_coeffs.
OpucSystem build_system_gram_schmidt(const MomentTable& t, int n_max);

// Ladder identities tying consecutive leading coefficients to the defect
// square roots, valid in the recurrence normalization:
//   sqrt(I - H_n^* H_n) = K_nn^{-1} K_{n-1,n-1}
//   sqrt(I - H_n H_n^*) = (L_nn^*)^{-1} L_{n-1,n-1}^*
// Returns the max residual over n and both forms.
double leading_ladder_residual(const OpucSystem& sys);

// max over pairs m <= n of |<phi_n, phi_m> - delta_nm I|_2, both families.
double orthonormality_residual(const OpucSystem& sys, const MomentTable& t);
double orthonormality_residual_row(const OpucSystem& sys, const MomentTable& t, int n);

}  // namespace mopuc
