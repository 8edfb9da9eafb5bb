#include "mopuc/matpoly.hpp"

#include <utility>

namespace mopuc {

MatPoly::MatPoly(int dim, int formal_degree) : dim_(dim) {
  if (dim <= 0) throw InvalidArgument("polynomial dimension must be positive");
  if (formal_degree < 0) throw InvalidArgument("formal degree must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(formal_degree) + 1, CMat(dim));
}

MatPoly::MatPoly(std::vector<CMat> coeffs) : dim_(0), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
  dim_ = coeffs_.front().dim();
  for (const auto& c : coeffs_)
    if (c.dim() != dim_) throw DimensionMismatch("coefficient dimensions differ");
}

MatPoly MatPoly::constant(const CMat& c) { return MatPoly(std::vector<CMat>{c}); }

MatPoly MatPoly::monomial(const CMat& c, int k) {
  MatPoly p(c.dim(), k);
  p.coeff(k) = c;
  return p;
}

const CMat& MatPoly::coeff(int k) const {
  if (k < 0 || k > deg()) throw InvalidArgument("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(k)];
}

CMat& MatPoly::coeff(int k) {
  if (k < 0 || k > deg()) throw InvalidArgument("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(k)];
}

CMat MatPoly::eval(Complex z) const {
  // Horner: ((C_n z + C_{n-1}) z + ...) z + C_0.
  CMat acc = coeffs_.back();
  for (int k = deg() - 1; k >= 0; --k) acc = acc * z + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

MatPoly MatPoly::reversed(int n) const {
  if (n < deg()) throw DegreeExceedsFormal("reversal degree below polynomial degree");
  MatPoly q(dim_, n);
  for (int k = 0; k <= deg(); ++k) q.coeff(n - k) = coeffs_[static_cast<std::size_t>(k)].adjoint();
  return q;
}

MatPoly MatPoly::times_z() const {
  MatPoly q(dim_, deg() + 1);
  for (int k = 0; k <= deg(); ++k) q.coeff(k + 1) = coeffs_[static_cast<std::size_t>(k)];
  return q;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("polynomial dimensions differ");
  MatPoly r(a.dim(), std::max(a.deg(), b.deg()));
  for (int k = 0; k <= a.deg(); ++k) r.coeff(k) += a.coeff(k);
  for (int k = 0; k <= b.deg(); ++k) r.coeff(k) += b.coeff(k);
  return r;
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("polynomial dimensions differ");
  MatPoly r(a.dim(), std::max(a.deg(), b.deg()));
  for (int k = 0; k <= a.deg(); ++k) r.coeff(k) += a.coeff(k);
  for (int k = 0; k <= b.deg(); ++k) r.coeff(k) -= b.coeff(k);
  return r;
}

MatPoly operator*(Complex s, const MatPoly& p) {
  MatPoly r = p;
  for (int k = 0; k <= r.deg(); ++k) r.coeff(k) *= s;
  return r;
}

MatPoly left_mul(const CMat& a, const MatPoly& p) {
  MatPoly r(p.dim(), p.deg());
  for (int k = 0; k <= p.deg(); ++k) r.coeff(k) = a * p.coeff(k);
  return r;
}

MatPoly right_mul(const MatPoly& p, const CMat& a) {
  MatPoly r(p.dim(), p.deg());
  for (int k = 0; k <= p.deg(); ++k) r.coeff(k) = p.coeff(k) * a;
  return r;
}

}  // namespace mopuc
