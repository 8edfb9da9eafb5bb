#include <cmath>
#include <vector>

#include "doctest.h"
#include "mopuc/eig.hpp"
#include "mopuc/kernels.hpp"
#include "mopuc/measure.hpp"
#include "mopuc/opuc.hpp"
#include "mopuc/recurrence.hpp"
#include "mopuc/weight.hpp"
#include "test_util.hpp"

using mopuc::Atom;
using mopuc::CMat;
using mopuc::Complex;
using mopuc::MatMeasure;
using mopuc::MatPoly;
using mopuc::MomentTable;
using mopuc::OpucSystem;
using testutil::kPi;

namespace {

MatMeasure lebesgue_with_atom(int p) {
  CMat mass = 0.5 * CMat::identity(p);
  return MatMeasure(mopuc::make_identity_lebesgue(p), {Atom{1.0, mass}});
}

}  // namespace

TEST_CASE("the flat measure produces monomials and vanishing reflections exactly") {
  MatMeasure rho(mopuc::make_identity_lebesgue(2));
  const OpucSystem sys = mopuc::build_system(rho, 8);
  CHECK(sys.p == 2);
  CHECK(sys.n_max == 8);
  CHECK(sys.normalization == mopuc::Normalization::kRecurrence);
  for (int n = 0; n <= 8; ++n) {
    CHECK(testutil::max_entry_diff(sys.left(n).coeff(n), CMat::identity(2)) == 0.0);
    CHECK(testutil::max_entry_diff(sys.right(n).coeff(n), CMat::identity(2)) == 0.0);
    for (int k = 0; k < n; ++k) {
      CHECK(sys.left(n).coeff(k).max_abs() == 0.0);
      CHECK(sys.right(n).coeff(k).max_abs() == 0.0);
    }
  }
  for (int n = 1; n <= 8; ++n) CHECK(sys.reflection(n).max_abs() == 0.0);
}

TEST_CASE("the 1+cos weight has reflections of alternating sign and norm 1/(n+1)") {
  MatMeasure rho(testutil::cosine_weight({1.0}));
  const OpucSystem sys = mopuc::build_system(rho, 12);
  for (int n = 1; n <= 12; ++n) {
    const Complex h = sys.reflection(n)(0, 0);
    const double expect = ((n % 2) ? -1.0 : 1.0) / (n + 1);
    CHECK(std::abs(h - Complex(expect, 0.0)) < 1e-12);
  }
}

TEST_CASE("gram-schmidt produces hermitian positive leading coefficients and an orthonormal family") {
  MatMeasure rho = lebesgue_with_atom(2);
  const MomentTable t = mopuc::compute_moments(rho, 14);
  const OpucSystem sys = mopuc::build_system_gram_schmidt(t, 6);
  CHECK(sys.normalization == mopuc::Normalization::kHpd);
  CHECK(mopuc::orthonormality_residual(sys, t) < 1e-11);
  for (int n = 0; n <= 6; ++n) {
    for (const MatPoly* phi : {&sys.left(n), &sys.right(n)}) {
      const CMat lead = phi->leading();
      CHECK(mopuc::hermitian_defect(lead) < 1e-12 * (1.0 + lead.frobenius_norm()));
      const auto dec = mopuc::eig_hermitian(mopuc::hermitian_part(lead));
      CHECK(dec.eigenvalues.front() > 0.0);
    }
  }
}

TEST_CASE("recurrence and gram-schmidt constructions describe the same family") {
  MatMeasure rho = lebesgue_with_atom(2);
  const MomentTable t = mopuc::compute_moments(rho, 18);
  const OpucSystem rec = mopuc::build_system(t, 8);
  const OpucSystem gs = mopuc::build_system_gram_schmidt(t, 8);
  // Reflection coefficients transform by unitary factors between
  // normalizations, so their singular values must agree.
  for (int n = 1; n <= 8; ++n) {
    const auto sa = mopuc::singular_values(rec.reflection(n));
    const auto sb = mopuc::singular_values(gs.reflection(n));
    for (std::size_t i = 0; i < sa.size(); ++i) CHECK(std::abs(sa[i] - sb[i]) < 1e-10);
  }
  // phi^* phi is normalization-free; compare it pointwise on the circle.
  for (int n : {3, 8}) {
    for (int k = 0; k < 64; ++k) {
      const Complex z = std::polar(1.0, 2.0 * kPi * k / 64.0);
      const CMat a = rec.left(n).eval(z);
      const CMat b = gs.left(n).eval(z);
      CHECK(testutil::max_entry_diff(a.adjoint() * a, b.adjoint() * b) < 1e-10);
    }
  }
}

TEST_CASE("reflections recovered from extreme coefficients match the stored sequence") {
  const auto seq = mopuc::random_reflection_sequence(2, 6, 7, 0.8);
  const OpucSystem sys = mopuc::favard_synthesize(seq);
  for (int n = 1; n <= 6; ++n) {
    const CMat h = mopuc::reflection_from_coeffs(sys.left(n), sys.right(n));
    CHECK(testutil::max_entry_diff(h, sys.reflection(n)) < 1e-12);
  }
}

TEST_CASE("reflections recovered from moments match the stored sequence") {
  const auto seq = mopuc::random_reflection_sequence(2, 5, 11, 0.7);
  const OpucSystem sys = mopuc::favard_synthesize(seq);
  const MatMeasure rho = mopuc::bernstein_szego_measure(sys, 5);
  const MomentTable t = mopuc::compute_moments(rho, 12);
  for (int n = 0; n < 5; ++n) {
    const CMat h = mopuc::reflection_from_moments(sys.left(n), sys.right(n), t);
    CHECK(testutil::max_entry_diff(h, sys.reflection(n + 1)) < 1e-10);
  }
}

TEST_CASE("pairs taken from different measures are rejected") {
  const OpucSystem a = mopuc::build_system(MatMeasure(testutil::cosine_weight({1.0})), 4);
  const OpucSystem b = mopuc::build_system(lebesgue_with_atom(1), 4);
  CHECK_THROWS_AS(mopuc::reflection_from_coeffs(a.left(3), b.right(3)),
                  mopuc::IncompatiblePair);
}

TEST_CASE("a purely atomic measure is rejected as degenerate") {
  CMat zero(1), mass(1);
  mass(0, 0) = 0.5;
  MatMeasure rho(mopuc::make_arc_indicator(0.0, kPi, 0.0, zero, zero), {Atom{1.0, mass}});
  CHECK_THROWS_AS(mopuc::build_system(rho, 3), mopuc::DegenerateMeasure);
  const MomentTable t = mopuc::compute_moments(rho, 8);
  CHECK_THROWS_AS(mopuc::gram_schmidt_left(t, 3), mopuc::DegenerateMeasure);
}

TEST_CASE("building past the moment table is rejected") {
  MatMeasure rho(mopuc::make_identity_lebesgue(2));
  const MomentTable t = mopuc::compute_moments(rho, 4);
  CHECK_THROWS_AS(mopuc::build_system(t, 2), mopuc::InsufficientMoments);
  CHECK_NOTHROW(mopuc::build_system(t, 1));
}

TEST_CASE("leading coefficients climb the defect ladder") {
  const auto seq = mopuc::random_reflection_sequence(2, 6, 3, 0.8);
  const OpucSystem favard = mopuc::favard_synthesize(seq);
  CHECK(mopuc::leading_ladder_residual(favard) < 1e-12);
  const OpucSystem fejer = mopuc::build_system(MatMeasure(testutil::cosine_weight({1.0})), 10);
  CHECK(mopuc::leading_ladder_residual(fejer) < 1e-12);
}

TEST_CASE("a diagonal weight decouples into its scalar channels") {
  MatMeasure joint(mopuc::make_diagonal({testutil::cosine_weight({0.8}),
                                         testutil::cosine_weight({0.4})}));
  MatMeasure first(testutil::cosine_weight({0.8}));
  MatMeasure second(testutil::cosine_weight({0.4}));
  const OpucSystem sj = mopuc::build_system(joint, 8);
  const OpucSystem s1 = mopuc::build_system(first, 8);
  const OpucSystem s2 = mopuc::build_system(second, 8);
  for (int n = 1; n <= 8; ++n) {
    const CMat& h = sj.reflection(n);
    CHECK(std::abs(h(0, 1)) == 0.0);
    CHECK(std::abs(h(1, 0)) == 0.0);
    CHECK(std::abs(h(0, 0) - s1.reflection(n)(0, 0)) < 1e-14);
    CHECK(std::abs(h(1, 1) - s2.reflection(n)(0, 0)) < 1e-14);
  }
}

TEST_CASE("conjugating the weight by a unitary leaves reflection singular values alone") {
  const double r = 1.0 / std::sqrt(2.0);
  CMat u(2, {Complex(r, 0), Complex(r, 0), Complex(0, r), Complex(0, -r)});
  mopuc::WeightPtr base = testutil::cosine_weight({1.0, 0.5});
  const OpucSystem sb = mopuc::build_system(MatMeasure(base), 6);
  const OpucSystem sc = mopuc::build_system(MatMeasure(mopuc::make_conjugated(u, base)), 6);
  for (int n = 1; n <= 6; ++n) {
    const auto sa = mopuc::singular_values(sb.reflection(n));
    const auto sv = mopuc::singular_values(sc.reflection(n));
    for (std::size_t i = 0; i < sa.size(); ++i) CHECK(std::abs(sa[i] - sv[i]) < 1e-12);
  }
}

TEST_CASE("the rowwise orthonormality defect aggregates to the full residual") {
  MatMeasure rho = lebesgue_with_atom(2);
  const MomentTable t = mopuc::compute_moments(rho, 14);
  const OpucSystem sys = mopuc::build_system(t, 6);
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n)
    worst = std::max(worst, mopuc::orthonormality_residual_row(sys, t, n));
  CHECK(std::abs(worst - mopuc::orthonormality_residual(sys, t)) < 1e-15);
}
