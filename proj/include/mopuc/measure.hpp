#pragma once

#include <vector>

#include "json.hpp"
#include "mopuc/matpoly.hpp"
#include "mopuc/weight.hpp"

namespace mopuc {

inline constexpr int kDefaultQuadPoints = 4096;

// Point mass: theta in [0, 2pi) (reduced mod 2pi, nothing else), mass
// Hermitian PSD. Atom masses enter moments raw, without the 1/2pi of the
// absolutely continuous part.
struct Atom {
  double theta;
  CMat mass;
};

// Matrix measure drho = W(theta) dtheta / 2pi + sum_j M_j delta_{theta_j}.
class MatMeasure {
 public:
  explicit MatMeasure(WeightPtr weight, std::vector<Atom> atoms = {},
                      int quad_points = kDefaultQuadPoints);

  int dim() const { return weight_->dim(); }
  const Weight& weight() const { return *weight_; }
  const WeightPtr& weight_ptr() const { return weight_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int quad_points() const { return quad_points_; }

  nlohmann::json to_json() const;
  static MatMeasure from_json(const nlohmann::json& j);

 private:
  WeightPtr weight_;
  std::vector<Atom> atoms_;
  int quad_points_;
};

// Trigonometric moments mu_m = integral of e^{-i m theta} drho(theta) for
// |m| <= max_order. Conjugate symmetry mu_{-m} = mu_m* holds exactly.
class MomentTable {
 public:
  MomentTable(int p, int max_order, std::vector<CMat> mu);

  int dim() const { return p_; }
  int max_order() const { return max_order_; }

  // Throws InsufficientMoments when |m| > max_order.
  const CMat& mu(int m) const;

 private:
  int p_;
  int max_order_;
  std::vector<CMat> mu_;  // mu_[m + max_order]
};

// Moment computation. Exact for weights with analytic Fourier coefficients;
// otherwise quadrature at the measure's resolution q, cross-checked against
// 2q, throwing QuadratureUnderResolved when any moment moves by more than
// 1e-9 * (1 + |mu_0|_2). Smooth full-circle weights use the periodic
// trapezoid rule; weights with jumps use per-panel Gauss-Legendre.
MomentTable compute_moments(const MatMeasure& rho, int max_order);

// Plain-loop reference implementation; bit-identical to compute_moments.
MomentTable compute_moments_serial(const MatMeasure& rho, int max_order);

CMat moment(const MatMeasure& rho, int m);

// <P, Q>_L = integral of P drho Q^*  = sum_{j,k} P_j mu_{k-j} Q_k^*.
CMat inner_left(const MatPoly& p, const MatPoly& q, const MomentTable& t);

// <P, Q>_R = integral of P^* drho Q = sum_{j,k} P_j^* mu_{j-k} Q_k.
CMat inner_right(const MatPoly& p, const MatPoly& q, const MomentTable& t);

}  // namespace mopuc
