#include <doctest.h>

#include "curvelab/scalar.hpp"

using namespace curvelab;

TEST_CASE("exact arithmetic is closed and error-free") {
  QC a(mpq_class(1, 3), mpq_class(2, 7));
  QC b(mpq_class(-5, 11), mpq_class(1, 2));
  QC s = (a + b) - b;
  CHECK(s == a);
  QC p = (a * b) / b;
  CHECK(p == a);
  CHECK_THROWS_AS(a / QC(0), NumericError);
}

TEST_CASE("conjugation and realness") {
  QC z(mpq_class(3), mpq_class(-4));
  CHECK(conj(z) == QC(mpq_class(3), mpq_class(4)));
  CHECK(!z.is_real());
  CHECK((z * conj(z)).is_real());
}

TEST_CASE("float guard rejects non-finite values") {
  CHECK_THROWS_AS(checked(CD(1.0 / 0.0, 0.0)), NumericError);
  CHECK(checked(CD(2.0, -1.0)) == CD(2.0, -1.0));
}

TEST_CASE("rational string round trips") {
  CHECK(format_rational(mpq_class(1, 4)) == "0.25");
  CHECK(format_rational(mpq_class(-13, 10)) == "-1.3");
  CHECK(format_rational(mpq_class(1, 3)) == "1/3");
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("-1.3") == mpq_class(-13, 10));
  CHECK(parse_rational("1/3") == mpq_class(1, 3));
  CHECK(parse_rational("3e-2") == mpq_class(3, 100));
  CHECK(parse_rational("-4.5e1") == mpq_class(-45));
  mpq_class q(-355, 113);
  CHECK(parse_rational(format_rational(q)) == q);
}

TEST_CASE("pow2 scaling tracks magnitude") {
  QC big(mpq_class("123456789123456789123456789"), mpq_class(0));
  long lg = approx_log2(big);
  QC scaled = scale_pow2(big, lg);
  double d = to_double(scaled.re);
  CHECK(std::abs(d) <= 1.0);
  CHECK(std::abs(d) >= 0.25);
}
