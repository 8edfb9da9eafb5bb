#pragma once

#include <vector>

#include "mopuc/cmat.hpp"

namespace mopuc {

// Nodes and weights of a quadrature rule on [-1, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes, computed by Newton iteration on the
// Legendre recurrence and cached per order.
const QuadRule& gauss_legendre(int n);

// Affine image of a [-1, 1] rule on [a, b].
QuadRule map_rule(const QuadRule& base, double a, double b);

// theta_i = 2 pi i / q, i = 0..q-1.
std::vector<double> uniform_circle(int q);

// (1/2pi) * closed trapezoid over the circle for samples f(theta_i) on a
// strictly increasing grid in [0, 2pi); the wrap panel closes the circle.
// Summation order is fixed (ascending index) for determinism.
CMat integrate_circle(const std::vector<double>& theta, const std::vector<CMat>& values);

}  // namespace mopuc
