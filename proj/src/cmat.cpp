#include "mopuc/cmat.hpp"

#include <cmath>
#include <utility>

namespace mopuc {

CMat::CMat(int dim) : dim_(dim) {
  if (dim <= 0) throw InvalidArgument("matrix dimension must be positive");
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

CMat::CMat(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
  if (dim <= 0) throw InvalidArgument("matrix dimension must be positive");
  if (a_.size() != static_cast<std::size_t>(dim) * dim)
    throw DimensionMismatch("entry count does not match dimension");
  if (!all_finite()) throw InvalidArgument("matrix entries must be finite");
}

CMat CMat::identity(int dim) {
  CMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(const std::vector<Complex>& d) {
  CMat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  if (!m.all_finite()) throw InvalidArgument("matrix entries must be finite");
  return m;
}

CMat& CMat::operator+=(const CMat& rhs) {
  check_same_dim(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  check_same_dim(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

CMat& CMat::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMat CMat::adjoint() const {
  CMat r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex CMat::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMat::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool CMat::all_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMat operator+(CMat lhs, const CMat& rhs) {
  lhs += rhs;
  return lhs;
}

CMat operator-(CMat lhs, const CMat& rhs) {
  lhs -= rhs;
  return lhs;
}

CMat operator*(const CMat& lhs, const CMat& rhs) {
  check_same_dim(lhs, rhs);
  const int p = lhs.dim();
  CMat r(p);
  for (int i = 0; i < p; ++i) {
    for (int k = 0; k < p; ++k) {
      const Complex v = lhs(i, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < p; ++j) r(i, j) += v * rhs(k, j);
    }
  }
  return r;
}

CMat operator*(Complex s, CMat m) {
  m *= s;
  return m;
}

CMat operator*(CMat m, Complex s) {
  m *= s;
  return m;
}

void check_same_dim(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
}

CMat hermitian_part(const CMat& a) {
  const int p = a.dim();
  CMat h(p);
  for (int i = 0; i < p; ++i) {
    h(i, i) = Complex(a(i, i).real(), 0.0);
    for (int j = i + 1; j < p; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double hermitian_defect(const CMat& a) {
  const int p = a.dim();
  double s = 0.0;
  for (int i = 0; i < p; ++i) {
    s += 4.0 * a(i, i).imag() * a(i, i).imag();
    for (int j = i + 1; j < p; ++j) s += 2.0 * std::norm(a(i, j) - std::conj(a(j, i)));
  }
  return std::sqrt(s);
}

}  // namespace mopuc
