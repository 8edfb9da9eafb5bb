#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "json.hpp"
#include "mopuc/cmat.hpp"
#include "mopuc/matpoly.hpp"

namespace mopuc {

// Absolutely continuous part of a matrix measure on the unit circle: a
// Hermitian PSD density W(theta) integrated against dtheta / 2pi.
class Weight {
 public:
  virtual ~Weight() = default;

  virtual int dim() const = 0;
  virtual CMat value(double theta) const = 0;

  // Interior jump locations in [0, 2pi), ascending. Empty means the density
  // is smooth and periodic over the whole circle.
  virtual std::vector<double> breakpoints() const { return {}; }

  // True when fourier_coefficient() returns exact values for every order.
  virtual bool analytic_moments() const { return false; }

  // c_m = (1/2pi) * integral of W(theta) e^{-i m theta} dtheta, exact, for
  // families that admit one in closed form.
  virtual std::optional<CMat> fourier_coefficient(int m) const {
    (void)m;
    return std::nullopt;
  }

  virtual nlohmann::json to_json() const = 0;
};

using WeightPtr = std::shared_ptr<const Weight>;

// W(theta) = I.
WeightPtr make_identity_lebesgue(int p);

// Trigonometric polynomial W(theta) = W_0 + sum_{k=1..K} (W_k e^{ik theta} +
// W_k* e^{-ik theta}); coeffs = {W_0, ..., W_K}. W_0 is hermitized on entry,
// so the conjugate symmetry of the coefficient list is exact by construction.
WeightPtr make_trig_poly(std::vector<CMat> coeffs);

// inside on the arc [a, b), floor_eps * outside elsewhere. Requires
// 0 <= a < b <= 2pi, floor_eps >= 0, both matrices Hermitian PSD.
WeightPtr make_arc_indicator(double a, double b, double floor_eps, CMat inside, CMat outside);

// diag(w_1(theta), ..., w_p(theta)) from p scalar (dim-1) weights.
WeightPtr make_diagonal(std::vector<WeightPtr> entries);

// U W(theta) U* for a fixed unitary U.
WeightPtr make_conjugated(CMat u, WeightPtr inner);

// Bernstein-Szego density ( phiL(z)* phiL(z) )^{-1} on z = e^{i theta},
// built from the degree-n orthonormal pair of some system.
WeightPtr make_bernstein_szego(MatPoly phi_left, MatPoly phi_right);

WeightPtr weight_from_json(const nlohmann::json& j);

}  // namespace mopuc
