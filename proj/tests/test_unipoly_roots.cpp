#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "curvelab/rng.hpp"
#include "curvelab/roots.hpp"
#include "curvelab/unipoly.hpp"

using namespace curvelab;

namespace {

bool has_root(const RootSet& rs, CD z, int mult, double tol) {
  return std::any_of(rs.roots.begin(), rs.roots.end(), [&](const RootM& r) {
    return std::abs(r.z - z) <= tol && r.multiplicity == mult;
  });
}

}  // namespace

TEST_CASE("x^2+1 has roots +-i") {
  UniPoly<CD> p(std::vector<CD>{CD(1.0), CD(0.0), CD(1.0)});
  auto rs = roots(p);
  REQUIRE(rs.roots.size() == 2);
  CHECK(has_root(rs, CD(0.0, 1.0), 1, 1e-12));
  CHECK(has_root(rs, CD(0.0, -1.0), 1, 1e-12));
  CHECK(rs.total_multiplicity() == 2);
}

TEST_CASE("(x-2)^2 (x+1) detects the double root by clustering") {
  std::vector<CD> rts{CD(2.0), CD(2.0), CD(-1.0)};
  auto p = from_roots<CD>(rts);
  auto rs = roots(p);
  REQUIRE(rs.roots.size() == 2);
  CHECK(has_root(rs, CD(2.0), 2, 1e-5));
  CHECK(has_root(rs, CD(-1.0), 1, 1e-8));
  CHECK(rs.total_multiplicity() == 3);
}

TEST_CASE("degree-20 random roots in the unit disk recovered to 1e-8") {
  Rng r2(1234);
  std::vector<CD> rts;
  while (rts.size() < 20) {
    CD z(r2.uniform(-1, 1), r2.uniform(-1, 1));
    bool ok = true;
    for (auto& w : rts)
      if (std::abs(w - z) < 1e-2) ok = false;
    if (ok) rts.push_back(z);
  }
  auto p = from_roots<CD>(rts);
  auto rs = roots(p);
  REQUIRE(rs.converged);
  REQUIRE(rs.total_multiplicity() == 20);
  for (auto& z : rts) CHECK(has_root(rs, z, 1, 1e-8));
}

TEST_CASE("roots of zero and constant polynomials are errors") {
  CHECK_THROWS_AS(roots(UniPoly<CD>{}), NumericError);
  CHECK_THROWS_AS(roots(UniPoly<CD>::constant(CD(3.0))), NumericError);
}

TEST_CASE("reported residuals satisfy the reported bound") {
  Rng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<CD> c;
    int deg = 30;
    for (int i = 0; i <= deg; ++i) c.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    UniPoly<CD> p(std::move(c));
    auto rs = roots(p);
    CHECK(rs.converged);
    double maxc = 0;
    for (auto& k : p.c) maxc = std::max(maxc, std::abs(k));
    for (auto& r : rs.roots) {
      CHECK(r.residual <= rs.residual_bound);
      if (r.multiplicity == 1) CHECK(r.residual <= 1e-8 * (1.0 + maxc));
    }
  }
}

TEST_CASE("exact divrem and gcd") {
  using P = UniPoly<QC>;
  P a(std::vector<QC>{QC(-2), QC(0), QC(1)});       // x^2 - 2
  P b(std::vector<QC>{QC(1), QC(1)});               // x + 1
  auto [q, r] = divrem(a, b);
  CHECK((q * b + r) == a);
  P f = from_roots<QC>(std::vector<QC>{QC(1), QC(2), QC(3)});
  P g = from_roots<QC>(std::vector<QC>{QC(2), QC(5)});
  auto d = gcd(f, g);
  CHECK(d.degree() == 1);
  CHECK(d(QC(2)).is_zero());
}
