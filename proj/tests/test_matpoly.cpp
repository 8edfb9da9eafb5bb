#include <random>

#include "doctest.h"
#include "mopuc/matpoly.hpp"
#include "test_util.hpp"

using mopuc::CMat;
using mopuc::Complex;
using mopuc::MatPoly;

TEST_CASE("construction, formal degree, and coefficient access") {
  MatPoly p(2, 3);
  CHECK(p.dim() == 2);
  CHECK(p.deg() == 3);
  CHECK(p.coeff(0).dim() == 2);
  CHECK(p.leading().max_abs() == 0.0);
  CHECK_THROWS_AS(p.coeff(4), mopuc::InvalidArgument);
  CHECK_THROWS_AS(MatPoly(0, 1), mopuc::InvalidArgument);
  CHECK_THROWS_AS(MatPoly(2, -1), mopuc::InvalidArgument);

  const MatPoly c = MatPoly::constant(CMat::identity(2));
  CHECK(c.deg() == 0);
  const MatPoly m = MatPoly::monomial(CMat::identity(2), 3);
  CHECK(m.deg() == 3);
  CHECK(m.coeff(1).max_abs() == 0.0);
  CHECK(m.leading()(0, 0) == Complex(1, 0));
}

TEST_CASE("evaluation matches the direct power sum") {
  std::mt19937_64 g(3);
  std::vector<CMat> coeffs;
  for (int k = 0; k <= 4; ++k) coeffs.push_back(testutil::random_mat(2, g));
  const MatPoly p(coeffs);
  for (Complex z : {Complex(0.3, -0.7), Complex(1, 0), Complex(0, 0), Complex(-2, 1)}) {
    CMat direct(2);
    Complex zk = 1.0;
    for (int k = 0; k <= 4; ++k) {
      direct += coeffs[static_cast<std::size_t>(k)] * zk;
      zk *= z;
    }
    CHECK(testutil::max_entry_diff(p.eval(z), direct) < 1e-13);
  }
  CHECK(testutil::bitwise_equal(p.eval(Complex(0, 0)), coeffs[0]));
}

TEST_CASE("reversal conjugates and flips coefficients about the formal degree") {
  std::mt19937_64 g(5);
  std::vector<CMat> coeffs;
  for (int k = 0; k <= 2; ++k) coeffs.push_back(testutil::random_mat(2, g));
  const MatPoly p(coeffs);
  const MatPoly q = p.reversed(2);
  for (int k = 0; k <= 2; ++k)
    CHECK(testutil::bitwise_equal(q.coeff(k), coeffs[static_cast<std::size_t>(2 - k)].adjoint()));
  // reversal at a larger formal degree pads at the low end
  const MatPoly q4 = p.reversed(4);
  CHECK(q4.deg() == 4);
  CHECK(q4.coeff(0).max_abs() == 0.0);
  CHECK(q4.coeff(1).max_abs() == 0.0);
  CHECK(testutil::bitwise_equal(q4.coeff(2), coeffs[2].adjoint()));
  CHECK_THROWS_AS(p.reversed(1), mopuc::DegreeExceedsFormal);
  // double reversal restores the polynomial
  CHECK(testutil::bitwise_equal(q.reversed(2).coeff(1), coeffs[1]));
}

TEST_CASE("reversal agrees with z^n P(1/conj(z))^* pointwise") {
  std::mt19937_64 g(9);
  std::vector<CMat> coeffs;
  for (int k = 0; k <= 3; ++k) coeffs.push_back(testutil::random_mat(2, g));
  const MatPoly p(coeffs);
  const MatPoly q = p.reversed(3);
  for (Complex z : {Complex(0.4, 0.2), Complex(-1.3, 0.5), Complex(0, 2)}) {
    const Complex zi = 1.0 / std::conj(z);
    const CMat expect = (z * z * z) * Complex(1, 0) * p.eval(zi).adjoint();
    CHECK(testutil::max_entry_diff(q.eval(z), expect) < 1e-12 * (1.0 + expect.max_abs()));
  }
}

TEST_CASE("multiplication by z shifts coefficients up") {
  std::mt19937_64 g(7);
  const CMat c0 = testutil::random_mat(2, g);
  const CMat c1 = testutil::random_mat(2, g);
  const MatPoly p({c0, c1});
  const MatPoly zp = p.times_z();
  CHECK(zp.deg() == 2);
  CHECK(zp.coeff(0).max_abs() == 0.0);
  CHECK(testutil::bitwise_equal(zp.coeff(1), c0));
  CHECK(testutil::bitwise_equal(zp.coeff(2), c1));
}

TEST_CASE("sums, differences, scalar and one-sided matrix multiples") {
  std::mt19937_64 g(15);
  const MatPoly p({testutil::random_mat(2, g), testutil::random_mat(2, g)});
  const MatPoly q({testutil::random_mat(2, g), testutil::random_mat(2, g),
                   testutil::random_mat(2, g)});
  const MatPoly s = p + q;
  CHECK(s.deg() == 2);
  CHECK(testutil::bitwise_equal(s.coeff(2), q.coeff(2)));
  CHECK(testutil::max_entry_diff(s.coeff(0), p.coeff(0) + q.coeff(0)) == 0.0);
  const MatPoly d = q - p;
  CHECK(testutil::max_entry_diff(d.coeff(1), q.coeff(1) - p.coeff(1)) == 0.0);
  const MatPoly sc = Complex(0, 2) * p;
  CHECK(testutil::bitwise_equal(sc.coeff(1), p.coeff(1) * Complex(0, 2)));

  const CMat a = testutil::random_mat(2, g);
  const MatPoly lp = mopuc::left_mul(a, p);
  const MatPoly rp = mopuc::right_mul(p, a);
  CHECK(testutil::bitwise_equal(lp.coeff(1), a * p.coeff(1)));
  CHECK(testutil::bitwise_equal(rp.coeff(1), p.coeff(1) * a));
  CHECK(!testutil::bitwise_equal(lp.coeff(1), rp.coeff(1)));
  // evaluation is linear in the coefficients
  const Complex z(0.6, -0.8);
  CHECK(testutil::max_entry_diff(lp.eval(z), a * p.eval(z)) < 1e-13);
  CHECK(testutil::max_entry_diff(rp.eval(z), p.eval(z) * a) < 1e-13);
}

TEST_CASE("dimension mismatches are rejected") {
  const MatPoly p(2, 1);
  const MatPoly q(3, 1);
  CHECK_THROWS_AS(p + q, mopuc::DimensionMismatch);
  CHECK_THROWS_AS(mopuc::left_mul(CMat(3), p), mopuc::DimensionMismatch);
  CHECK_THROWS_AS(mopuc::right_mul(p, CMat(3)), mopuc::DimensionMismatch);
}
