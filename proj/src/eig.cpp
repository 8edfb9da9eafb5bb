#include "mopuc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mopuc {

namespace {

double offdiag_frobenius(const CMat& m) {
  const int p = m.dim();
  double s = 0.0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

SpectralDecomp eig_hermitian(const CMat& a) {
  const int p = a.dim();
  const double defect = hermitian_defect(a);
  if (defect > 1e-10 * (1.0 + a.frobenius_norm()))
    throw NotHermitian("matrix is not Hermitian within tolerance");

  CMat m = hermitian_part(a);
  CMat v = CMat::identity(p);
  const double stop = 1e-14 * m.frobenius_norm();
  const int max_sweeps = 30 * p * p;

  bool converged = offdiag_frobenius(m) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        const Complex beta = m(i, j);
        const double ab = std::abs(beta);
        if (ab == 0.0) continue;
        // Unitary plane rotation V = [[c, s], [-conj(s), c]] on columns
        // (i, j), chosen so that (V* M V)(i, j) vanishes.
        const double alpha = m(i, i).real();
        const double gamma = m(j, j).real();
        const double tau = (gamma - alpha) / (2.0 * ab);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * (beta / ab);

        for (int k = 0; k < p; ++k) {  // M <- M V
          const Complex mi = m(k, i), mj = m(k, j);
          m(k, i) = c * mi - std::conj(s) * mj;
          m(k, j) = s * mi + c * mj;
        }
        for (int k = 0; k < p; ++k) {  // M <- V* M
          const Complex mi = m(i, k), mj = m(j, k);
          m(i, k) = c * mi - s * mj;
          m(j, k) = std::conj(s) * mi + c * mj;
        }
        m(i, j) = Complex(0.0, 0.0);
        m(j, i) = Complex(0.0, 0.0);
        m(i, i) = Complex(m(i, i).real(), 0.0);
        m(j, j) = Complex(m(j, j).real(), 0.0);

        for (int k = 0; k < p; ++k) {  // accumulate V
          const Complex vi = v(k, i), vj = v(k, j);
          v(k, i) = c * vi - std::conj(s) * vj;
          v(k, j) = s * vi + c * vj;
        }
      }
    }
    converged = offdiag_frobenius(m) <= stop;
  }
  if (!converged) throw NoConvergence("Jacobi eigensolver failed to converge");

  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&m](int x, int y) { return m(x, x).real() < m(y, y).real(); });

  SpectralDecomp d{std::vector<double>(static_cast<std::size_t>(p)), CMat(p)};
  for (int c = 0; c < p; ++c) {
    d.eigenvalues[static_cast<std::size_t>(c)] = m(order[static_cast<std::size_t>(c)],
                                                   order[static_cast<std::size_t>(c)])
                                                     .real();
    for (int r = 0; r < p; ++r) d.eigenvectors(r, c) = v(r, order[static_cast<std::size_t>(c)]);
  }
  return d;
}

CMat inverse(const CMat& a) {
  const int p = a.dim();
  const double tol = 1e-14 * a.frobenius_norm();

  CMat m = a;
  CMat inv = CMat::identity(p);
  for (int col = 0; col < p; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < p; ++r) {
      const double cand = std::abs(m(r, col));
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best <= tol) throw SingularMatrix("pivot below tolerance in Gauss-Jordan");
    if (piv != col) {
      for (int j = 0; j < p; ++j) {
        std::swap(m(col, j), m(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const Complex d = m(col, col);
    for (int j = 0; j < p; ++j) {
      m(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < p; ++r) {
      if (r == col) continue;
      const Complex f = m(r, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < p; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Shared spectral-function core: B = V diag(f(lambda)) V*.
CMat spectral_map(const CMat& a, bool inverse_sqrt) {
  const SpectralDecomp d = eig_hermitian(a);
  const int p = a.dim();
  double scale = 0.0;
  for (double lam : d.eigenvalues) scale = std::max(scale, std::abs(lam));
  const double clamp = 1e-12 * (1.0 + scale);

  std::vector<double> f(d.eigenvalues.size());
  for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
    double lam = d.eigenvalues[k];
    if (lam < -clamp) throw NotPsd("matrix has an eigenvalue below the PSD clamp window");
    if (lam < 0.0) lam = 0.0;
    if (inverse_sqrt) {
      if (lam == 0.0) throw SingularMatrix("PSD matrix is singular, inverse sqrt undefined");
      f[k] = 1.0 / std::sqrt(lam);
    } else {
      f[k] = std::sqrt(lam);
    }
  }

  CMat b(p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < p; ++k)
        s += d.eigenvectors(i, k) * f[static_cast<std::size_t>(k)] *
             std::conj(d.eigenvectors(j, k));
      b(i, j) = s;
    }
  return hermitian_part(b);
}

}  // namespace

CMat psd_sqrt(const CMat& a) { return spectral_map(a, false); }

CMat psd_inverse_sqrt(const CMat& a) { return spectral_map(a, true); }

std::vector<double> singular_values(const CMat& a) {
  const CMat gram = a * a.adjoint();
  const SpectralDecomp d = eig_hermitian(gram);
  std::vector<double> sv(d.eigenvalues.size());
  for (std::size_t k = 0; k < sv.size(); ++k) {
    const double lam = d.eigenvalues[d.eigenvalues.size() - 1 - k];
    sv[k] = std::sqrt(std::max(lam, 0.0));
  }
  return sv;
}

double spectral_norm(const CMat& a) { return singular_values(a)[0]; }

bool is_unitary(const CMat& a, double tol) {
  return spectral_norm(a * a.adjoint() - CMat::identity(a.dim())) <= tol;
}

}  // namespace mopuc
