#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mopuc/measure.hpp"
#include "mopuc/weight.hpp"
#include "test_util.hpp"

using mopuc::Atom;
using mopuc::CMat;
using mopuc::Complex;
using mopuc::MatMeasure;
using mopuc::MomentTable;
using testutil::kPi;

TEST_CASE("lebesgue moments are exactly the identity at order zero and zero elsewhere") {
  MatMeasure rho(mopuc::make_identity_lebesgue(2));
  const MomentTable t = mopuc::compute_moments(rho, 6);
  CHECK(testutil::bitwise_equal(t.mu(0), CMat::identity(2)));
  for (int m = 1; m <= 6; ++m) {
    CHECK(t.mu(m).max_abs() == 0.0);
    CHECK(t.mu(-m).max_abs() == 0.0);
  }
  CHECK_THROWS_AS(t.mu(7), mopuc::InsufficientMoments);
  CHECK_THROWS_AS(t.mu(-7), mopuc::InsufficientMoments);
}

TEST_CASE("a pure point mass contributes e^{-im theta} times its mass, unscaled") {
  CMat zero(2), mass(2);
  mass(0, 0) = 0.5;
  mass(1, 1) = 0.25;
  // zero weight: an arc with zero matrices on both sides
  MatMeasure rho(mopuc::make_arc_indicator(0.0, kPi, 0.0, zero, zero), {Atom{0.0, mass}});
  const MomentTable t = mopuc::compute_moments(rho, 5);
  for (int m = -5; m <= 5; ++m) CHECK(testutil::max_entry_diff(t.mu(m), mass) < 1e-15);

  MatMeasure shifted(mopuc::make_arc_indicator(0.0, kPi, 0.0, zero, zero), {Atom{1.0, mass}});
  const MomentTable ts = mopuc::compute_moments(shifted, 3);
  const Complex phase = std::polar(1.0, -2.0);
  CHECK(testutil::max_entry_diff(ts.mu(2), mass * phase) < 1e-15);
}

TEST_CASE("trigonometric polynomial weights echo their fourier data exactly") {
  std::mt19937_64 g(21);
  const CMat w1 = testutil::random_mat(2, g) * Complex(0.25);
  CMat w0 = testutil::random_hpd(2, g, 4.0);  // dominant constant term keeps W psd
  MatMeasure rho(mopuc::make_trig_poly({w0, w1}));
  const MomentTable t = mopuc::compute_moments(rho, 4);
  CHECK(testutil::max_entry_diff(t.mu(0), mopuc::hermitian_part(w0)) == 0.0);
  CHECK(testutil::max_entry_diff(t.mu(1), w1) == 0.0);
  CHECK(testutil::max_entry_diff(t.mu(-1), w1.adjoint()) == 0.0);
  CHECK(t.mu(2).max_abs() == 0.0);
  CHECK(t.mu(-3).max_abs() == 0.0);
}

TEST_CASE("half-circle indicator moments match the closed form") {
  CMat inside(1), outside(1);
  inside(0, 0) = 1.0;
  MatMeasure rho(mopuc::make_arc_indicator(0.0, kPi, 0.0, inside, outside));
  const MomentTable t = mopuc::compute_moments(rho, 40);
  for (int m = 0; m <= 40; ++m) {
    Complex exact = 0.0;
    if (m == 0) exact = 0.5;
    else if (m % 2 == 1) exact = Complex(0.0, -1.0 / (kPi * m));
    CHECK(std::abs(t.mu(m)(0, 0) - exact) < 1e-12);
  }
}

TEST_CASE("conjugating by the identity reproduces analytic moments through quadrature") {
  mopuc::WeightPtr base = testutil::cosine_weight({1.0, 0.5});
  MatMeasure analytic(base);
  MatMeasure sampled(mopuc::make_conjugated(CMat::identity(2), base));
  const MomentTable ta = mopuc::compute_moments(analytic, 8);
  const MomentTable tq = mopuc::compute_moments(sampled, 8);
  for (int m = -8; m <= 8; ++m) CHECK(testutil::max_entry_diff(ta.mu(m), tq.mu(m)) < 1e-13);
}

TEST_CASE("conjugation by a genuine unitary preserves hermiticity and transforms moments") {
  const double r = 1.0 / std::sqrt(2.0);
  CMat u(2, {Complex(r, 0), Complex(r, 0), Complex(0, r), Complex(0, -r)});
  mopuc::WeightPtr base = testutil::cosine_weight({1.0, 0.5});
  MatMeasure rho(mopuc::make_conjugated(u, base));
  const MomentTable t = mopuc::compute_moments(rho, 4);
  const MomentTable tb = mopuc::compute_moments(MatMeasure(base), 4);
  for (int m = -4; m <= 4; ++m)
    CHECK(testutil::max_entry_diff(t.mu(m), u * tb.mu(m) * u.adjoint()) < 1e-13);
}

TEST_CASE("a too-coarse grid is reported rather than silently aliased") {
  mopuc::WeightPtr base = testutil::cosine_weight({1.0});
  MatMeasure rho(mopuc::make_conjugated(CMat::identity(1), base), {}, 4);
  CHECK_THROWS_AS(mopuc::compute_moments(rho, 3), mopuc::QuadratureUnderResolved);
}

TEST_CASE("conjugate symmetry of the table is exact") {
  CMat inside(2), outside(2);
  inside(0, 0) = 1.0;
  inside(0, 1) = Complex(0.2, 0.1);
  inside(1, 0) = Complex(0.2, -0.1);
  inside(1, 1) = 0.7;
  outside(0, 0) = 1.0;
  outside(1, 1) = 1.0;
  MatMeasure rho(mopuc::make_arc_indicator(0.5, 2.5, 0.3, inside, outside),
                 {Atom{3.0, CMat::identity(2)}});
  const MomentTable t = mopuc::compute_moments(rho, 12);
  for (int m = 1; m <= 12; ++m) CHECK(testutil::bitwise_equal(t.mu(-m), t.mu(m).adjoint()));
  CHECK(mopuc::hermitian_defect(t.mu(0)) == 0.0);
}

TEST_CASE("moment() agrees with the table") {
  MatMeasure rho(testutil::cosine_weight({0.8}), {Atom{1.0, CMat::identity(1)}});
  const MomentTable t = mopuc::compute_moments(rho, 3);
  for (int m = -3; m <= 3; ++m)
    CHECK(testutil::max_entry_diff(mopuc::moment(rho, m), t.mu(m)) == 0.0);
}

TEST_CASE("serial and parallel moment computation agree bitwise") {
  CMat inside(2), outside(2);
  inside(0, 0) = 2.0;
  inside(1, 1) = 1.0;
  outside(0, 0) = 1.0;
  outside(1, 1) = 1.0;
  MatMeasure rho(mopuc::make_arc_indicator(1.0, 4.0, 0.5, inside, outside),
                 {Atom{0.25, CMat::identity(2)}});
  const MomentTable a = mopuc::compute_moments(rho, 16);
  const MomentTable b = mopuc::compute_moments_serial(rho, 16);
  for (int m = -16; m <= 16; ++m) CHECK(testutil::bitwise_equal(a.mu(m), b.mu(m)));
}

TEST_CASE("inner products satisfy the adjoint and scalar-transpose identities") {
  std::mt19937_64 g(33);
  MatMeasure rho(testutil::cosine_weight({1.0, 0.5}), {Atom{2.0, CMat::identity(2)}});
  const MomentTable t = mopuc::compute_moments(rho, 8);
  const mopuc::MatPoly p({testutil::random_mat(2, g), testutil::random_mat(2, g),
                          testutil::random_mat(2, g)});
  const mopuc::MatPoly q({testutil::random_mat(2, g), testutil::random_mat(2, g)});
  const CMat gl = mopuc::inner_left(p, q, t);
  const CMat gl_swapped = mopuc::inner_left(q, p, t);
  CHECK(testutil::max_entry_diff(gl.adjoint(), gl_swapped) < 1e-13);
  const CMat gr = mopuc::inner_right(p, q, t);
  const CMat gr_swapped = mopuc::inner_right(q, p, t);
  CHECK(testutil::max_entry_diff(gr.adjoint(), gr_swapped) < 1e-13);

  MatMeasure srho(testutil::cosine_weight({0.6}));
  const MomentTable st = mopuc::compute_moments(srho, 6);
  const mopuc::MatPoly sp({testutil::random_mat(1, g), testutil::random_mat(1, g)});
  const mopuc::MatPoly sq({testutil::random_mat(1, g), testutil::random_mat(1, g),
                           testutil::random_mat(1, g)});
  CHECK(testutil::max_entry_diff(mopuc::inner_right(sp, sq, st),
                                 mopuc::inner_left(sq, sp, st)) < 1e-14);
}

TEST_CASE("lebesgue inner products of monomials are kronecker deltas") {
  MatMeasure rho(mopuc::make_identity_lebesgue(2));
  const MomentTable t = mopuc::compute_moments(rho, 8);
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k) {
      const auto mj = mopuc::MatPoly::monomial(CMat::identity(2), j);
      const auto mk = mopuc::MatPoly::monomial(CMat::identity(2), k);
      const CMat gl = mopuc::inner_left(mj, mk, t);
      const CMat expect = (j == k) ? CMat::identity(2) : CMat(2);
      CHECK(testutil::max_entry_diff(gl, expect) == 0.0);
    }
}

TEST_CASE("measure construction validates atoms and grid size") {
  auto leb = mopuc::make_identity_lebesgue(2);
  CHECK_THROWS_AS(MatMeasure(leb, {}, 5), mopuc::InvalidArgument);
  CHECK_THROWS_AS(MatMeasure(leb, {}, 0), mopuc::InvalidArgument);
  CMat neg(2);
  neg(0, 0) = -1.0;
  CHECK_THROWS_AS(MatMeasure(leb, {Atom{0.0, neg}}), mopuc::NotPsd);
  CMat skew(2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(MatMeasure(leb, {Atom{0.0, skew}}), mopuc::NotHermitian);
  CHECK_THROWS_AS(MatMeasure(leb, {Atom{0.0, CMat::identity(1)}}), mopuc::DimensionMismatch);
  CHECK_THROWS_AS(MatMeasure(leb, {Atom{1.0, CMat::identity(2)}, Atom{1.0, CMat::identity(2)}}),
                  mopuc::InvalidArgument);
  // angles are reduced into [0, 2pi)
  MatMeasure ok(leb, {Atom{-kPi, CMat::identity(2)}});
  CHECK(ok.atoms()[0].theta == doctest::Approx(kPi));
}

TEST_CASE("moment table shape is validated") {
  CHECK_THROWS_AS(MomentTable(0, 1, {}), mopuc::InvalidArgument);
  CHECK_THROWS_AS(MomentTable(1, -1, {}), mopuc::InvalidArgument);
  CHECK_THROWS_AS(MomentTable(1, 1, {CMat(1)}), mopuc::DimensionMismatch);
  const MomentTable t(1, 0, {CMat::identity(1)});
  CHECK(t.max_order() == 0);
}

TEST_CASE("weight factories validate their inputs") {
  CHECK_THROWS_AS(mopuc::make_identity_lebesgue(0), mopuc::InvalidArgument);
  CHECK_THROWS_AS(mopuc::make_trig_poly({}), mopuc::InvalidArgument);
  CMat inside(1), outside(1);
  inside(0, 0) = 1.0;
  CHECK_THROWS_AS(mopuc::make_arc_indicator(2.0, 1.0, 0.0, inside, outside),
                  mopuc::InvalidArgument);
  CHECK_THROWS_AS(mopuc::make_arc_indicator(0.0, 7.0, 0.0, inside, outside),
                  mopuc::InvalidArgument);
  CHECK_THROWS_AS(mopuc::make_arc_indicator(0.0, 1.0, -0.5, inside, outside),
                  mopuc::InvalidArgument);
  CHECK_THROWS_AS(mopuc::make_diagonal({}), mopuc::InvalidArgument);
  CHECK_THROWS_AS(mopuc::make_conjugated(2.0 * CMat::identity(2),
                                         mopuc::make_identity_lebesgue(2)),
                  mopuc::InvalidArgument);
}
