#pragma once

#include <utility>
#include <vector>

#include "mopuc/opuc.hpp"

namespace mopuc {

// Left kernel K_n(z, xi) = sum_{k<=n} phi_k^L(z)^* phi_k^L(xi); reproduces
// point evaluation of degree <= n polynomials under <., .>_L.
CMat cd_kernel_left(const OpucSystem& sys, int n, Complex z, Complex xi);

// Right kernel sum_{k<=n} phi_k^R(xi) phi_k^R(z)^*.
CMat cd_kernel_right(const OpucSystem& sys, int n, Complex z, Complex xi);

// Fixed evaluation set: a 12x12 tensor grid on the circle plus 16 interior
// pairs with radii in [0.15, 0.9].
std::vector<std::pair<Complex, Complex>> default_cd_grid();

// Christoffel-Darboux defect, both the left form
//   (1 - xi conj(z)) K_n(z, xi)
//     = tilde(phi_n^R)(z)^* tilde(phi_n^R)(xi) - xi conj(z) phi_n^L(z)^* phi_n^L(xi)
// and the mirrored right form, as a max over the grid of
// |lhs - rhs|_2 / (1 + |lhs|_2 + |rhs|_2).
double cd_residual(const OpucSystem& sys, int n,
                   const std::vector<std::pair<Complex, Complex>>& grid);

// On |z| = 1 the two one-sided products agree:
//   phi_n^R(z) tilde(phi_n^R)(z) = tilde(phi_n^L)(z) phi_n^L(z).
// Max over angles of the relative defect.
double circle_identity_residual(const OpucSystem& sys, int n, const std::vector<double>& thetas);

// R(z) = tilde(phi_n^R)(z) phi_n^L(z)^{-1} is unitary on the circle and
// equals phi_n^R(z)^{-1} tilde(phi_n^L)(z). Max over angles of
// max(|R R* - I|_2, |R - phi_n^R(z)^{-1} tilde(phi_n^L)(z)|_2).
double ratio_unitarity_deviation(const OpucSystem& sys, int n, const std::vector<double>& thetas);

}  // namespace mopuc
