#include "curvelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvelab {

namespace {

// Horner value together with a running error bound (Adams-style):
// |computed - exact| <= eps * errsum.
struct EvalBound {
  CD value;
  double errsum;
};

EvalBound eval_with_bound(const UniPoly<CD>& p, CD x) {
  CD acc(0.0);
  double ax = std::abs(x), e = 0.0;
  for (size_t i = p.c.size(); i-- > 0;) {
    acc = acc * x + p.c[i];
    e = e * ax + std::abs(acc);
  }
  return {acc, 2.0 * e};
}

}  // namespace

RootSet roots(const UniPoly<CD>& p, double cluster_tol, int max_iters) {
  if (p.is_zero_poly()) throw NumericError("roots of the zero polynomial");
  for (const auto& k : p.c) checked(k);

  UniPoly<CD> q = p;
  RootSet out;

  // roots at the origin
  size_t zeros = 0;
  while (zeros < q.c.size() && is_zero(q.c[zeros])) ++zeros;
  if (zeros > 0) {
    q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(zeros));
    out.roots.push_back({CD(0.0), static_cast<int>(zeros), 0.0});
  }
  if (q.degree() < 1) {
    if (out.roots.empty()) throw NumericError("roots of a constant polynomial");
    return out;
  }

  const int n = q.degree();
  const CD lead = q.leading();
  double maxcoef = 0.0;
  for (const auto& k : q.c) maxcoef = std::max(maxcoef, std::abs(k));

  // Cauchy-style radius for the start circle.
  double radius = 0.0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, std::abs(q.c[static_cast<size_t>(i)] / lead));
  radius = 1.0 + radius;
  radius = std::min(radius, 1e6);

  std::vector<CD> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * std::numbers::pi * (k + 0.353) / n + 0.91;
    z[static_cast<size_t>(k)] = 0.5 * radius * CD(std::cos(th), std::sin(th));
  }

  UniPoly<CD> dq = derivative(q);
  std::vector<bool> done(static_cast<size_t>(n), false);
  bool all_done = false;

  for (int iter = 0; iter < max_iters && !all_done; ++iter) {
    all_done = true;
    for (int k = 0; k < n; ++k) {
      auto idx = static_cast<size_t>(k);
      if (done[idx]) continue;
      auto [pv, bound] = eval_with_bound(q, z[idx]);
      if (std::abs(pv) <= bound * 1e-16) {
        done[idx] = true;
        continue;
      }
      CD dv = dq(z[idx]);
      CD newton = (dv != CD(0.0)) ? pv / dv : CD(1e-2);
      CD sum(0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) sum += CD(1.0) / (z[idx] - z[static_cast<size_t>(j)]);
      CD denom = CD(1.0) - newton * sum;
      CD step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = newton;
      z[idx] -= step;
      if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[idx]))) all_done = false;
    }
  }
  out.converged = all_done;

  // cluster merge
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<RootM> merged;
  for (int i = 0; i < n; ++i) {
    auto ii = static_cast<size_t>(i);
    if (used[ii]) continue;
    std::vector<size_t> cluster{ii};
    used[ii] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int j = 0; j < n; ++j) {
        auto jj = static_cast<size_t>(j);
        if (used[jj]) continue;
        for (size_t c : cluster)
          if (std::abs(z[jj] - z[c]) <= cluster_tol) {
            cluster.push_back(jj);
            used[jj] = true;
            grew = true;
            break;
          }
      }
    }
    CD centroid(0.0);
    for (size_t c : cluster) centroid += z[c];
    centroid /= static_cast<double>(cluster.size());
    merged.push_back({centroid, static_cast<int>(cluster.size()), std::abs(q(centroid))});
  }
  std::sort(merged.begin(), merged.end(), [](const RootM& a, const RootM& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  out.roots.insert(out.roots.end(), merged.begin(), merged.end());

  out.residual_bound = 0.0;
  for (const auto& r : out.roots) {
    double b = eval_with_bound(q, r.z).errsum * 1e-15;
    // multiple roots sit at the bottom of a flat basin; widen accordingly
    b = std::max(b, maxcoef * std::pow(1e-12, 1.0 / r.multiplicity));
    out.residual_bound = std::max(out.residual_bound, b);
    if (r.residual > b) out.converged = false;
  }
  return out;
}

std::vector<double> real_roots(const UniPoly<CD>& p, double imag_tol) {
  std::vector<double> out;
  for (const auto& r : roots(p).roots)
    if (std::abs(r.z.imag()) <= imag_tol * (1.0 + std::abs(r.z)))
      for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.z.real());
  return out;
}

}  // namespace curvelab
