#include <doctest.h>

#include <array>
#include <cmath>

#include "curvelab/multipoly.hpp"
#include "curvelab/rng.hpp"

using namespace curvelab;

namespace {

MultiPoly<QC> mono2(int a, int b, long c) {
  return MultiPoly<QC>::monomial(2, Expo{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)}, QC(c));
}

}  // namespace

TEST_CASE("jet of x^2+y^2 at the origin, order 2") {
  auto f = mono2(2, 0, 1) + mono2(0, 2, 1);
  std::array<QC, 2> origin{QC(0), QC(0)};
  auto jet = eval_jet<QC>(f, origin, 2);
  CHECK(jet == f);
}

TEST_CASE("jet of y^2+x^3 at order 2 drops the cubic term") {
  auto f = mono2(0, 2, 1) + mono2(3, 0, 1);
  std::array<QC, 2> origin{QC(0), QC(0)};
  auto jet = eval_jet<QC>(f, origin, 2);
  CHECK(jet == mono2(0, 2, 1));
}

TEST_CASE("full-order jet at a random point reproduces f at offsets") {
  Rng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    MultiPoly<CD> f(2);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        f = f + MultiPoly<CD>::monomial(2, Expo{(std::uint8_t)a, (std::uint8_t)b},
                                        CD(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    std::array<CD, 2> p{CD(rng.uniform(-1, 1)), CD(rng.uniform(-1, 1))};
    auto jet = eval_jet<CD>(f, p, 3);
    for (int k = 0; k < 10; ++k) {
      std::array<CD, 2> off{CD(rng.uniform(-0.3, 0.3)), CD(rng.uniform(-0.3, 0.3))};
      std::array<CD, 2> at{p[0] + off[0], p[1] + off[1]};
      CD lhs = jet.eval(off);
      CD rhs = f.eval(at);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("affine substitution composes correctly") {
  // f(x,y) = x y, substitute x -> x+2y, y -> 3x-1
  auto f = mono2(1, 1, 1);
  std::vector<std::vector<QC>> A{{QC(1), QC(2)}, {QC(3), QC(0)}};
  std::vector<QC> b{QC(0), QC(-1)};
  auto g = f.substitute_affine(A, b);
  // expect (x+2y)(3x-1) = 3x^2 + 6xy - x - 2y
  auto expect = mono2(2, 0, 3) + mono2(1, 1, 6) + mono2(1, 0, -1) + mono2(0, 1, -2);
  CHECK(g == expect);
}

TEST_CASE("derivative and coefficient extraction") {
  auto f = mono2(2, 1, 5) + mono2(0, 3, -2);
  auto fx = f.derivative(0);
  CHECK(fx == mono2(1, 1, 10));
  auto in_y = f.coeffs_in(1);
  REQUIRE(in_y.size() == 4);
  CHECK(in_y[1] == mono2(2, 0, 5));
  CHECK(in_y[3] == mono2(0, 0, -2));
}
