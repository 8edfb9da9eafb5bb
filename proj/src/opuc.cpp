#include "mopuc/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mopuc/eig.hpp"

namespace mopuc {

namespace {

// Dense Hermitian solve helpers for the block-Toeplitz Gram sections. Row
// major, dimension n; only the lower triangle of the Cholesky factor is used.

void cholesky_in_place(std::vector<Complex>& a, std::size_t n, double piv_tol) {
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j].real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(a[j * n + k]);
    if (!(d > piv_tol)) throw DegenerateMeasure("Gram section is numerically singular");
    const double l = std::sqrt(d);
    a[j * n + j] = Complex(l, 0.0);
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * std::conj(a[j * n + k]);
      a[i * n + j] = s / l;
    }
  }
}

// Solves L L^* x = b in place (b holds x afterwards).
void cholesky_solve(const std::vector<Complex>& l, std::size_t n, std::vector<Complex>& b) {
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * b[k];
    b[i] = s / l[i * n + i].real();
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Complex s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l[k * n + ii]) * b[k];
    b[ii] = s / l[ii * n + ii].real();
  }
}

enum class GramSide { kLeft, kRight };

// Left Gram has blocks mu(col - row); right Gram has mu(row - col).
std::vector<Complex> assemble_gram(const MomentTable& t, int blocks, GramSide side) {
  const int p = t.dim();
  const std::size_t n = static_cast<std::size_t>(blocks) * p;
  std::vector<Complex> a(n * n);
  for (int bj = 0; bj < blocks; ++bj)
    for (int bk = 0; bk < blocks; ++bk) {
      const CMat& m = side == GramSide::kLeft ? t.mu(bk - bj) : t.mu(bj - bk);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
          a[(static_cast<std::size_t>(bj) * p + r) * n + static_cast<std::size_t>(bk) * p + c] =
              m(r, c);
    }
  return a;
}

// Last block column of the Gram inverse: X_j = [G^{-1}]_{j, n_deg}.
std::vector<CMat> inverse_last_block_column(const MomentTable& t, int n_deg, GramSide side,
                                            double piv_tol) {
  const int p = t.dim();
  const int blocks = n_deg + 1;
  const std::size_t n = static_cast<std::size_t>(blocks) * p;
  std::vector<Complex> gram = assemble_gram(t, blocks, side);
  cholesky_in_place(gram, n, piv_tol);

  std::vector<CMat> x(static_cast<std::size_t>(blocks), CMat(p));
  std::vector<Complex> rhs(n);
  for (int c = 0; c < p; ++c) {
    std::fill(rhs.begin(), rhs.end(), Complex(0.0, 0.0));
    rhs[static_cast<std::size_t>(n_deg) * p + c] = Complex(1.0, 0.0);
    cholesky_solve(gram, n, rhs);
    for (int bj = 0; bj < blocks; ++bj)
      for (int r = 0; r < p; ++r)
        x[static_cast<std::size_t>(bj)](r, c) = rhs[static_cast<std::size_t>(bj) * p + r];
  }
  return x;
}

double gram_pivot_tolerance(const MomentTable& t) { return 1e-12 * spectral_norm(t.mu(0)); }

bool gram_section_degenerate(const MomentTable& t, int blocks) {
  const std::size_t n = static_cast<std::size_t>(blocks) * t.dim();
  std::vector<Complex> gram = assemble_gram(t, blocks, GramSide::kLeft);
  try {
    cholesky_in_place(gram, n, gram_pivot_tolerance(t));
  } catch (const DegenerateMeasure&) {
    return true;
  }
  return false;
}

}  // namespace

std::vector<MatPoly> gram_schmidt_left(const MomentTable& t, int n_max) {
  if (n_max < 0) throw InvalidArgument("degree bound must be nonnegative");
  if (n_max > t.max_order())
    throw InsufficientMoments("moment table too short for the requested degree");
  const int p = t.dim();
  const double piv_tol = gram_pivot_tolerance(t);
  std::vector<MatPoly> phi;
  phi.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const std::vector<CMat> x = inverse_last_block_column(t, n, GramSide::kLeft, piv_tol);
    const CMat norm = psd_inverse_sqrt(hermitian_part(x.back()));
    MatPoly poly(p, n);
    for (int j = 0; j <= n; ++j)
      poly.coeff(j) = norm * x[static_cast<std::size_t>(j)].adjoint();
    phi.push_back(std::move(poly));
  }
  return phi;
}

std::vector<MatPoly> gram_schmidt_right(const MomentTable& t, int n_max) {
  if (n_max < 0) throw InvalidArgument("degree bound must be nonnegative");
  if (n_max > t.max_order())
    throw InsufficientMoments("moment table too short for the requested degree");
  const int p = t.dim();
  const double piv_tol = gram_pivot_tolerance(t);
  std::vector<MatPoly> phi;
  phi.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const std::vector<CMat> x = inverse_last_block_column(t, n, GramSide::kRight, piv_tol);
    const CMat norm = psd_inverse_sqrt(hermitian_part(x.back()));
    MatPoly poly(p, n);
    for (int j = 0; j <= n; ++j) poly.coeff(j) = x[static_cast<std::size_t>(j)] * norm;
    phi.push_back(std::move(poly));
  }
  return phi;
}

CMat reflection_from_coeffs(const MatPoly& phi_left_n, const MatPoly& phi_right_n) {
  if (phi_left_n.dim() != phi_right_n.dim())
    throw DimensionMismatch("left and right polynomial dimensions differ");
  if (phi_left_n.deg() != phi_right_n.deg())
    throw InvalidArgument("left and right polynomial degrees differ");
  if (phi_left_n.deg() < 1)
    throw InvalidArgument("reflection coefficients start at degree 1");

  const CMat& k_lead = phi_right_n.leading();
  const CMat& k_const = phi_right_n.coeff(0);
  const CMat& l_lead = phi_left_n.leading();
  const CMat& l_const = phi_left_n.coeff(0);

  const CMat lhs = l_const.adjoint() * l_lead;
  const CMat rhs = k_lead * k_const.adjoint();
  const double scale = 1.0 + spectral_norm(lhs) + spectral_norm(rhs);
  if (spectral_norm(lhs - rhs) > 1e-9 * scale)
    throw IncompatiblePair("left/right pair fails the compatibility identity");

  return inverse(l_lead.adjoint()) * k_const;
}

CMat reflection_from_moments(const MatPoly& phi_left_n, const MatPoly& phi_right_n,
                             const MomentTable& t) {
  if (phi_left_n.dim() != phi_right_n.dim())
    throw DimensionMismatch("left and right polynomial dimensions differ");
  if (phi_left_n.deg() != phi_right_n.deg())
    throw InvalidArgument("left and right polynomial degrees differ");
  const CMat h =
      inner_left(phi_left_n.times_z(), phi_right_n.reversed(phi_right_n.deg()), t);
  return Complex(-1.0, 0.0) * h;
}

namespace {

OpucSystem build_system_impl(const MomentTable& t, int n_max) {
  if (n_max < 0) throw InvalidArgument("degree bound must be nonnegative");
  if (t.max_order() < 2 * n_max + 2)
    throw InsufficientMoments("system construction needs moments to order 2 * n_max + 2");
  const int p = t.dim();

  const CMat mu0 = hermitian_part(t.mu(0));
  const SpectralDecomp d = eig_hermitian(mu0);
  if (!(d.eigenvalues.front() > 1e-12 * std::abs(d.eigenvalues.back())))
    throw DegenerateMeasure("total mass is numerically singular");

  OpucSystem sys;
  sys.p = p;
  sys.n_max = n_max;
  sys.normalization = Normalization::kRecurrence;
  const CMat phi0 = psd_inverse_sqrt(mu0);
  sys.phi_left.push_back(MatPoly::constant(phi0));
  sys.phi_right.push_back(MatPoly::constant(phi0));

  const CMat eye = CMat::identity(p);
  for (int n = 0; n < n_max; ++n) {
    const MatPoly& pl = sys.phi_left.back();
    const MatPoly& pr = sys.phi_right.back();
    const CMat h = reflection_from_moments(pl, pr, t);
    if (spectral_norm(h) >= 1.0 - 1e-8) {
      if (gram_section_degenerate(t, n + 2))
        throw DegenerateMeasure("measure is supported on too few points for this degree");
      throw ReflectionTooLarge("reflection coefficient reached the unit sphere");
    }
    const CMat dl = psd_inverse_sqrt(eye - h * h.adjoint());
    const CMat dr = psd_inverse_sqrt(eye - h.adjoint() * h);
    MatPoly next_left = left_mul(dl, pl.times_z() + left_mul(h, pr.reversed(n)));
    MatPoly next_right = right_mul(pr.times_z() + right_mul(pl.reversed(n), h), dr);
    sys.phi_left.push_back(std::move(next_left));
    sys.phi_right.push_back(std::move(next_right));
    sys.reflections.push_back(h);
  }

  // The achievable residual scales with the conditioning of the basis. The
  // leading-coefficient norm kappa_n plays the role of a condition number
  // (lambda_min of the Gram section is ~1/kappa_n^2), and the recursion
  // compounds rounding multiplicatively, so the residual of a correctly
  // built system grows like kappa_max^4 * eps. For measures with summable
  // reflection norms kappa_max is O(1) and the gate is 1e-9 itself; for
  // measures vanishing on a subarc kappa_n grows geometrically and an
  // absolute 1e-9 would reject correctly built systems.
  double kappa_max = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    kappa_max = std::max(kappa_max, spectral_norm(sys.phi_left[n].coeff(n)));
    kappa_max = std::max(kappa_max, spectral_norm(sys.phi_right[n].coeff(n)));
  }
  const double tol = std::max(1e-9, 1e-10 * kappa_max * kappa_max * kappa_max * kappa_max);
  const double resid = orthonormality_residual(sys, t);
  if (!(resid <= tol))
    throw NumericalError("orthonormality drifted beyond the conditioning-scaled tolerance");
  return sys;
}

}  // namespace

OpucSystem build_system(const MomentTable& t, int n_max) { return build_system_impl(t, n_max); }

OpucSystem build_system(const MatMeasure& rho, int n_max) {
  return build_system_impl(compute_moments(rho, 2 * n_max + 2), n_max);
}

OpucSystem build_system_gram_schmidt(const MomentTable& t, int n_max) {
  OpucSystem sys;
  sys.p = t.dim();
  sys.n_max = n_max;
  sys.normalization = Normalization::kHpd;
  sys.phi_left = gram_schmidt_left(t, n_max);
  sys.phi_right = gram_schmidt_right(t, n_max);
  for (int n = 1; n <= n_max; ++n)
    sys.reflections.push_back(reflection_from_coeffs(sys.left(n), sys.right(n)));
  return sys;
}

double leading_ladder_residual(const OpucSystem& sys) {
  const CMat eye = CMat::identity(sys.p);
  double worst = 0.0;
  for (int n = 1; n <= sys.n_max; ++n) {
    const CMat& h = sys.reflection(n);
    const CMat right_form = psd_sqrt(eye - h.adjoint() * h) -
                            inverse(sys.right(n).leading()) * sys.right(n - 1).leading();
    const CMat left_form =
        psd_sqrt(eye - h * h.adjoint()) -
        inverse(sys.left(n).leading().adjoint()) * sys.left(n - 1).leading().adjoint();
    worst = std::max(worst, spectral_norm(right_form));
    worst = std::max(worst, spectral_norm(left_form));
  }
  return worst;
}

double orthonormality_residual_row(const OpucSystem& sys, const MomentTable& t, int n) {
  const CMat eye = CMat::identity(sys.p);
  double worst = 0.0;
  for (int m = 0; m <= n; ++m) {
    CMat gl = inner_left(sys.left(n), sys.left(m), t);
    CMat gr = inner_right(sys.right(m), sys.right(n), t);
    if (m == n) {
      gl -= eye;
      gr -= eye;
    }
    worst = std::max(worst, spectral_norm(gl));
    worst = std::max(worst, spectral_norm(gr));
  }
  return worst;
}

double orthonormality_residual(const OpucSystem& sys, const MomentTable& t) {
  double worst = 0.0;
  for (int n = 0; n <= sys.n_max; ++n)
    worst = std::max(worst, orthonormality_residual_row(sys, t, n));
  return worst;
}

}  // namespace mopuc
