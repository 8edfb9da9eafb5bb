#include "mopuc/kernels.hpp"

#include <cmath>

#include "mopuc/eig.hpp"
#include "mopuc/parallel.hpp"

namespace mopuc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_degree(const OpucSystem& sys, int n) {
  if (n < 0 || n > sys.n_max) throw InvalidArgument("degree outside the system range");
}

}  // namespace

CMat cd_kernel_left(const OpucSystem& sys, int n, Complex z, Complex xi) {
  check_degree(sys, n);
  CMat acc(sys.p);
  for (int k = 0; k <= n; ++k) acc += sys.left(k).eval(z).adjoint() * sys.left(k).eval(xi);
  return acc;
}

CMat cd_kernel_right(const OpucSystem& sys, int n, Complex z, Complex xi) {
  check_degree(sys, n);
  CMat acc(sys.p);
  for (int k = 0; k <= n; ++k) acc += sys.right(k).eval(xi) * sys.right(k).eval(z).adjoint();
  return acc;
}

std::vector<std::pair<Complex, Complex>> default_cd_grid() {
  std::vector<std::pair<Complex, Complex>> grid;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      grid.emplace_back(std::polar(1.0, kTwoPi * a / 12.0),
                        std::polar(1.0, kTwoPi * b / 12.0 + 0.37));
  for (int a = 0; a < 16; ++a) {
    const double r1 = 0.15 + 0.75 * a / 15.0;
    const double r2 = 0.9 - 0.75 * a / 15.0;
    grid.emplace_back(std::polar(r1, kTwoPi * a / 16.0),
                      std::polar(r2, kTwoPi * (5 * a + 3) / 16.0));
  }
  return grid;
}

double cd_residual(const OpucSystem& sys, int n,
                   const std::vector<std::pair<Complex, Complex>>& grid) {
  check_degree(sys, n);
  const MatPoly tilde_r = sys.right(n).reversed();
  const MatPoly tilde_l = sys.left(n).reversed();
  std::vector<double> defect(grid.size(), 0.0);
  par::for_each_index(grid.size(), [&](std::size_t i) {
    const Complex z = grid[i].first;
    const Complex xi = grid[i].second;
    const Complex w = Complex(1.0, 0.0) - xi * std::conj(z);

    const CMat lhs_left = w * cd_kernel_left(sys, n, z, xi);
    const CMat rhs_left = tilde_r.eval(z).adjoint() * tilde_r.eval(xi) -
                          (xi * std::conj(z)) * (sys.left(n).eval(z).adjoint() * sys.left(n).eval(xi));
    const double r_left = spectral_norm(lhs_left - rhs_left) /
                          (1.0 + spectral_norm(lhs_left) + spectral_norm(rhs_left));

    const CMat lhs_right = w * cd_kernel_right(sys, n, z, xi);
    const CMat rhs_right = tilde_l.eval(xi) * tilde_l.eval(z).adjoint() -
                           (xi * std::conj(z)) * (sys.right(n).eval(xi) * sys.right(n).eval(z).adjoint());
    const double r_right = spectral_norm(lhs_right - rhs_right) /
                           (1.0 + spectral_norm(lhs_right) + spectral_norm(rhs_right));

    defect[i] = std::max(r_left, r_right);
  });
  double worst = 0.0;
  for (double d : defect) worst = std::max(worst, d);
  return worst;
}

double circle_identity_residual(const OpucSystem& sys, int n, const std::vector<double>& thetas) {
  check_degree(sys, n);
  if (thetas.empty()) throw EmptyGrid("angle grid is empty");
  const MatPoly tilde_r = sys.right(n).reversed();
  const MatPoly tilde_l = sys.left(n).reversed();
  std::vector<double> defect(thetas.size(), 0.0);
  par::for_each_index(thetas.size(), [&](std::size_t i) {
    const Complex z = std::polar(1.0, thetas[i]);
    const CMat lhs = sys.right(n).eval(z) * tilde_r.eval(z);
    const CMat rhs = tilde_l.eval(z) * sys.left(n).eval(z);
    defect[i] = spectral_norm(lhs - rhs) / (1.0 + spectral_norm(lhs) + spectral_norm(rhs));
  });
  double worst = 0.0;
  for (double d : defect) worst = std::max(worst, d);
  return worst;
}

double ratio_unitarity_deviation(const OpucSystem& sys, int n, const std::vector<double>& thetas) {
  check_degree(sys, n);
  if (thetas.empty()) throw EmptyGrid("angle grid is empty");
  const MatPoly tilde_r = sys.right(n).reversed();
  const MatPoly tilde_l = sys.left(n).reversed();
  const CMat eye = CMat::identity(sys.p);
  std::vector<double> defect(thetas.size(), 0.0);
  par::for_each_index(thetas.size(), [&](std::size_t i) {
    const Complex z = std::polar(1.0, thetas[i]);
    const CMat ratio = tilde_r.eval(z) * inverse(sys.left(n).eval(z));
    const CMat alt = inverse(sys.right(n).eval(z)) * tilde_l.eval(z);
    const double unit = spectral_norm(ratio * ratio.adjoint() - eye);
    const double same = spectral_norm(ratio - alt);
    defect[i] = std::max(unit, same);
  });
  double worst = 0.0;
  for (double d : defect) worst = std::max(worst, d);
  return worst;
}

}  // namespace mopuc
