#pragma once

#include <complex>
#include <vector>

#include "mopuc/errors.hpp"

namespace mopuc {

using Complex = std::complex<double>;

// Dense p-by-p complex matrix, row-major. p is small (block dimension of a
// matrix measure), so everything is plain O(p^3) dense arithmetic.
class CMat {
 public:
  explicit CMat(int dim);
  CMat(int dim, std::vector<Complex> entries);

  static CMat identity(int dim);
  static CMat diagonal(const std::vector<Complex>& d);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(Complex s);

  CMat adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  const std::vector<Complex>& data() const { return a_; }

 private:
  int dim_;
  std::vector<Complex> a_;
};

CMat operator+(CMat lhs, const CMat& rhs);
CMat operator-(CMat lhs, const CMat& rhs);
CMat operator*(const CMat& lhs, const CMat& rhs);
CMat operator*(Complex s, CMat m);
CMat operator*(CMat m, Complex s);

// Throws DimensionMismatch unless both matrices have equal dim.
void check_same_dim(const CMat& a, const CMat& b);

// (A + A*)/2, exactly Hermitian in floating point.
CMat hermitian_part(const CMat& a);

// Frobenius norm of A - A*; zero iff A is Hermitian.
double hermitian_defect(const CMat& a);

}  // namespace mopuc
