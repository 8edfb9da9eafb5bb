#include <cmath>
#include <limits>

#include "doctest.h"
#include "mopuc/cmat.hpp"
#include "test_util.hpp"

using mopuc::CMat;
using mopuc::Complex;

TEST_CASE("zero construction and dimension checks") {
  CMat a(3);
  CHECK(a.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a(i, j) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(CMat(0), mopuc::InvalidArgument);
  CHECK_THROWS_AS(CMat(-2), mopuc::InvalidArgument);
}

TEST_CASE("entry-list construction validates size and finiteness") {
  CMat a(2, {Complex(1, 0), Complex(0, 2), Complex(3, 0), Complex(0, -4)});
  CHECK(a(0, 1) == Complex(0, 2));
  CHECK(a(1, 0) == Complex(3, 0));
  CHECK_THROWS_AS(CMat(2, {Complex(1, 0)}), mopuc::DimensionMismatch);
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(CMat(1, {Complex(inf, 0)}), mopuc::InvalidArgument);
  CHECK_THROWS_AS(CMat(1, {Complex(0, nan)}), mopuc::InvalidArgument);
}

TEST_CASE("identity and diagonal factories") {
  const CMat eye = CMat::identity(2);
  CHECK(eye(0, 0) == Complex(1, 0));
  CHECK(eye(0, 1) == Complex(0, 0));
  const CMat d = CMat::diagonal({Complex(2, 0), Complex(0, 5)});
  CHECK(d.dim() == 2);
  CHECK(d(1, 1) == Complex(0, 5));
  CHECK(d(1, 0) == Complex(0, 0));
}

TEST_CASE("ring operations match hand-computed values") {
  CMat a(2, {Complex(1, 1), Complex(0, 2), Complex(3, 0), Complex(1, -1)});
  CMat b(2, {Complex(2, 0), Complex(1, 0), Complex(0, 1), Complex(0, 0)});
  const CMat s = a + b;
  CHECK(s(0, 0) == Complex(3, 1));
  const CMat dd = a - b;
  CHECK(dd(1, 0) == Complex(3, -1));
  // (a*b)(0,0) = (1+i)*2 + 2i*i = 2+2i-2 = 2i
  const CMat p = a * b;
  CHECK(p(0, 0) == Complex(0, 2));
  // (a*b)(0,1) = (1+i)*1 + 2i*0 = 1+i
  CHECK(p(0, 1) == Complex(1, 1));
  // (a*b)(1,0) = 3*2 + (1-i)*i = 6 + i + 1 = 7+i
  CHECK(p(1, 0) == Complex(7, 1));
  const CMat sc = Complex(0, 1) * a;
  CHECK(sc(0, 0) == Complex(-1, 1));
  CHECK(testutil::bitwise_equal(sc, a * Complex(0, 1)));
  CMat c = a;
  c += b;
  CHECK(testutil::bitwise_equal(c, s));
  c -= b;
  CHECK(testutil::bitwise_equal(c, a));
  CHECK_THROWS_AS(a + CMat(3), mopuc::DimensionMismatch);
  CHECK_THROWS_AS(a * CMat(3), mopuc::DimensionMismatch);
  CHECK_THROWS_AS(mopuc::check_same_dim(a, CMat(3)), mopuc::DimensionMismatch);
}

TEST_CASE("matrix products do not commute") {
  CMat a(2, {Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)});
  CMat b(2, {Complex(0, 0), Complex(0, 0), Complex(1, 0), Complex(0, 0)});
  CHECK(!testutil::bitwise_equal(a * b, b * a));
}

TEST_CASE("adjoint, trace, and norms") {
  CMat a(2, {Complex(1, 1), Complex(0, 2), Complex(3, 0), Complex(1, -1)});
  const CMat ad = a.adjoint();
  CHECK(ad(0, 0) == Complex(1, -1));
  CHECK(ad(0, 1) == Complex(3, 0));
  CHECK(ad(1, 0) == Complex(0, -2));
  CHECK(a.trace() == Complex(2, 0));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(2.0 + 4.0 + 9.0 + 2.0)));
  CHECK(a.max_abs() == doctest::Approx(3.0));
  CHECK(a.all_finite());
}

TEST_CASE("hermitian part is exactly Hermitian and defect detects asymmetry") {
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 20; ++rep) {
    const CMat a = testutil::random_mat(3, g);
    const CMat h = mopuc::hermitian_part(a);
    CHECK(mopuc::hermitian_defect(h) == 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(h(i, j).real() == h(j, i).real());
        CHECK(h(i, j).imag() == -h(j, i).imag());
      }
  }
  CMat skew(2, {Complex(0, 1), Complex(1, 0), Complex(-1, 0), Complex(0, 0)});
  CHECK(mopuc::hermitian_defect(skew) > 1.0);
  CHECK(mopuc::hermitian_defect(CMat::identity(4)) == 0.0);
}
