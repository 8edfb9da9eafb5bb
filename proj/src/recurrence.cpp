#include "mopuc/recurrence.hpp"

#include <cmath>
#include <random>

#include "mopuc/eig.hpp"

namespace mopuc {

void validate(const ReflectionSequence& seq) {
  if (seq.p < 1) throw InvalidArgument("reflection sequence needs a positive dimension");
  for (const auto& h : seq.h) {
    if (h.dim() != seq.p) throw DimensionMismatch("reflection coefficient dimension differs");
    if (!h.all_finite()) throw InvalidArgument("reflection coefficients must be finite");
    if (spectral_norm(h) > 1.0 - 1e-8)
      throw ReflectionTooLarge("reflection coefficient too close to the unit sphere");
  }
}

std::pair<MatPoly, MatPoly> szego_step(const MatPoly& phi_left, const MatPoly& phi_right,
                                       const CMat& h_next) {
  if (phi_left.dim() != phi_right.dim() || phi_left.dim() != h_next.dim())
    throw DimensionMismatch("polynomial and coefficient dimensions differ");
  if (phi_left.deg() != phi_right.deg())
    throw InvalidArgument("left and right polynomial degrees differ");
  const int n = phi_left.deg();
  const CMat eye = CMat::identity(h_next.dim());
  const CMat dl = psd_inverse_sqrt(eye - h_next * h_next.adjoint());
  const CMat dr = psd_inverse_sqrt(eye - h_next.adjoint() * h_next);
  MatPoly next_left =
      left_mul(dl, phi_left.times_z() + left_mul(h_next, phi_right.reversed(n)));
  MatPoly next_right =
      right_mul(phi_right.times_z() + right_mul(phi_left.reversed(n), h_next), dr);
  return {std::move(next_left), std::move(next_right)};
}

OpucSystem favard_synthesize(const ReflectionSequence& seq) {
  return favard_synthesize(seq, CMat::identity(seq.p > 0 ? seq.p : 1));
}

OpucSystem favard_synthesize(const ReflectionSequence& seq, const CMat& phi0) {
  validate(seq);
  if (phi0.dim() != seq.p) throw DimensionMismatch("phi_0 dimension differs from the sequence");
  if (hermitian_defect(phi0) > 1e-10 * (1.0 + phi0.frobenius_norm()))
    throw InvalidArgument("phi_0 must be Hermitian positive definite");
  const SpectralDecomp d = eig_hermitian(phi0);
  if (!(d.eigenvalues.front() > 0.0))
    throw InvalidArgument("phi_0 must be Hermitian positive definite");

  OpucSystem sys;
  sys.p = seq.p;
  sys.n_max = static_cast<int>(seq.h.size());
  sys.normalization = Normalization::kRecurrence;
  sys.phi_left.push_back(MatPoly::constant(phi0));
  sys.phi_right.push_back(MatPoly::constant(phi0));
  sys.reflections = seq.h;
  for (const auto& h : seq.h) {
    auto next = szego_step(sys.phi_left.back(), sys.phi_right.back(), h);
    sys.phi_left.push_back(std::move(next.first));
    sys.phi_right.push_back(std::move(next.second));
  }
  return sys;
}

MatMeasure bernstein_szego_measure(const OpucSystem& sys, int n, int quad_points) {
  if (n < 0 || n > sys.n_max) throw InvalidArgument("degree outside the system range");
  return MatMeasure(make_bernstein_szego(sys.left(n), sys.right(n)), {}, quad_points);
}

ReflectionSequence random_reflection_sequence(int p, int count, std::uint64_t seed,
                                              double max_norm) {
  if (p < 1 || count < 0) throw InvalidArgument("need p >= 1 and count >= 0");
  if (!(max_norm > 0.0 && max_norm <= 1.0 - 1e-8))
    throw InvalidArgument("max_norm must lie in (0, 1 - 1e-8]");
  std::mt19937_64 gen(seed);
  auto unit = [&gen]() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };  // [0, 1)

  ReflectionSequence seq;
  seq.p = p;
  for (int k = 0; k < count; ++k) {
    CMat g(p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) g(i, j) = Complex(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
    const double target = max_norm * (0.2 + 0.8 * unit());
    const double norm = spectral_norm(g);
    if (norm > 0.0) g *= Complex(target / norm, 0.0);
    seq.h.push_back(std::move(g));
  }
  return seq;
}

double roundtrip_discrepancy(const ReflectionSequence& seq, int quad_points) {
  const OpucSystem sys = favard_synthesize(seq);
  const int n_max = sys.n_max;
  const MatMeasure rho = bernstein_szego_measure(sys, n_max, quad_points);
  const OpucSystem rebuilt = build_system(rho, n_max);
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<double> sv_in = singular_values(sys.reflection(n));
    const std::vector<double> sv_out = singular_values(rebuilt.reflection(n));
    for (std::size_t i = 0; i < sv_in.size(); ++i)
      worst = std::max(worst, std::abs(sv_in[i] - sv_out[i]));
  }
  return worst;
}

}  // namespace mopuc
