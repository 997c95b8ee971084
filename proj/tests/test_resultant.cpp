#include <doctest.h>

#include <cmath>

#include "curvelab/resultant.hpp"
#include "curvelab/rng.hpp"

using namespace curvelab;

namespace {

// variables (t, a, b) for the symbolic cases
MultiPoly<QC> var3(int i) { return MultiPoly<QC>::variable(3, i); }

MultiPoly<QC> random_poly_in_t(Rng& rng, int nvars, int tvar, int maxdeg, int coefdeg) {
  MultiPoly<QC> p(nvars);
  for (int d = 0; d <= maxdeg; ++d) {
    for (int cx = 0; cx <= coefdeg; ++cx) {
      if (rng.uniform(0, 1) < 0.45) continue;
      Expo e(static_cast<size_t>(nvars), 0);
      e[static_cast<size_t>(tvar)] = static_cast<std::uint8_t>(d);
      e[static_cast<size_t>((tvar + 1) % nvars)] = static_cast<std::uint8_t>(cx);
      p = p + MultiPoly<QC>::monomial(nvars, e, QC(rng.integer(-5, 5)));
    }
  }
  return p;
}

}  // namespace

TEST_CASE("Res_t(t-a, t-b) = a-b") {
  auto t = var3(0), a = var3(1), b = var3(2);
  auto r = resultant(t - a, t - b, 0);
  CHECK(r == (a - b));
  auto rb = resultant_bareiss(t - a, t - b, 0);
  CHECK(rb == (a - b));
}

TEST_CASE("Res_t(t^2-1, t^2-4) = 9") {
  MultiPoly<QC> t2 = var3(0) * var3(0);
  auto f = t2 - MultiPoly<QC>::constant(3, QC(1));
  auto g = t2 - MultiPoly<QC>::constant(3, QC(4));
  auto r = resultant(f, g, 0);
  REQUIRE(r.nterms() == 1);
  CHECK(r.coefs[0] == QC(9));
}

TEST_CASE("Res_t(f, f) = 0 for nonconstant f") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_poly_in_t(rng, 3, 0, 3, 2);
    if (f.degree_in(0) < 1) continue;
    CHECK(resultant(f, f, 0).is_zero_poly());
  }
}

TEST_CASE("multiplicativity Res(f, g*h) = Res(f,g) Res(f,h) on exact inputs") {
  Rng rng(42);
  int done = 0;
  while (done < 6) {
    auto f = random_poly_in_t(rng, 3, 0, 4, 2);
    auto g = random_poly_in_t(rng, 3, 0, 2, 1);
    auto h = random_poly_in_t(rng, 3, 0, 2, 1);
    if (f.degree_in(0) < 1 || g.degree_in(0) < 1 || h.degree_in(0) < 1) continue;
    auto lhs = resultant(f, g * h, 0);
    auto rhs = resultant(f, g, 0) * resultant(f, h, 0);
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("interpolation and fraction-free routes agree") {
  Rng rng(9);
  for (int trial = 0; trial < 4; ++trial) {
    auto f = random_poly_in_t(rng, 2, 0, 4, 3);
    auto g = random_poly_in_t(rng, 2, 0, 4, 3);
    if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
    CHECK(resultant(f, g, 0) == resultant_bareiss(f, g, 0));
  }
}

TEST_CASE("exact-mode resultant matches float-mode within 1e-8") {
  Rng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    auto f = random_poly_in_t(rng, 2, 0, 4, 2);
    auto g = random_poly_in_t(rng, 2, 0, 4, 2);
    if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
    auto re = resultant(f, g, 0);
    auto rf = resultant(to_cd(f), to_cd(g), 0);
    // compare as dense coefficient maps
    double scale = 1e-30;
    for (auto& c : re.coefs) scale = std::max(scale, std::abs(to_cd(c)));
    for (size_t i = 0; i < rf.coefs.size(); ++i) {
      QC exact(0);
      for (size_t j = 0; j < re.coefs.size(); ++j)
        if (re.exps[j] == rf.exps[i]) exact = re.coefs[j];
      CHECK(std::abs(rf.coefs[i] - to_cd(exact)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("degenerate resultant inputs are errors") {
  auto c1 = MultiPoly<QC>::constant(3, QC(2));
  auto c2 = MultiPoly<QC>::constant(3, QC(5));
  CHECK_THROWS_AS(resultant(c1, c2, 0), NumericError);
  CHECK_THROWS_AS(resultant(MultiPoly<QC>::zero(3), c2, 0), NumericError);
}

TEST_CASE("discriminant convention Res(p, p')/lc") {
  // under this convention disc(x^2 - 5x + 6) = -(r1 - r2)^2 = -1
  UniPoly<QC> p(std::vector<QC>{QC(6), QC(-5), QC(1)});
  CHECK(discriminant(p) == QC(-1));
  // double root -> zero discriminant
  UniPoly<QC> q = from_roots<QC>(std::vector<QC>{QC(2), QC(2)});
  CHECK(discriminant(q).is_zero());
}
