#pragma once

#include <vector>

#include "mopuc/cmat.hpp"

namespace mopuc {

// Matrix polynomial P(z) = sum_k C_k z^k with p-by-p complex coefficients.
// The coefficient list has a formal degree: trailing zero blocks are kept, so
// deg() is the formal degree, not the exact one. The reversal operation
// depends on it.
class MatPoly {
 public:
  MatPoly(int dim, int formal_degree);
  explicit MatPoly(std::vector<CMat> coeffs);

  static MatPoly constant(const CMat& c);
  static MatPoly monomial(const CMat& c, int k);

  int dim() const { return dim_; }
  int deg() const { return static_cast<int>(coeffs_.size()) - 1; }

  const CMat& coeff(int k) const;
  CMat& coeff(int k);
  const CMat& leading() const { return coeffs_.back(); }

  CMat eval(Complex z) const;

  // Reversal at formal degree n >= deg(): Q(z) = z^n P(1/conj(z))^*, i.e.
  // Q_k = (P_{n-k})^*. Throws DegreeExceedsFormal when n < deg().
  MatPoly reversed(int n) const;
  MatPoly reversed() const { return reversed(deg()); }

  // z * P(z); formal degree grows by one.
  MatPoly times_z() const;

 private:
  int dim_;
  std::vector<CMat> coeffs_;
};

MatPoly operator+(const MatPoly& a, const MatPoly& b);
MatPoly operator-(const MatPoly& a, const MatPoly& b);
MatPoly operator*(Complex s, const MatPoly& p);

// A * P(z) and P(z) * A; matrix coefficients do not commute, both are needed.
MatPoly left_mul(const CMat& a, const MatPoly& p);
MatPoly right_mul(const MatPoly& p, const CMat& a);

}  // namespace mopuc
