#pragma once

#include <vector>

#include "curvelab/unipoly.hpp"

namespace curvelab {

struct RootM {
  CD z;
  int multiplicity = 1;
  double residual = 0.0;  // |p(z)|
};

struct RootSet {
  std::vector<RootM> roots;
  bool converged = true;
  double residual_bound = 0.0;  // accepted roots satisfy |p(z)| <= bound

  int total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
  }
};

/// All complex roots by simultaneous (Aberth-Ehrlich) iteration, starting
/// from a scaled circle. Roots closer than cluster_tol are merged into a
/// single root with summed multiplicity. Throws on the zero polynomial;
/// non-convergence is reported through the converged flag.
RootSet roots(const UniPoly<CD>& p, double cluster_tol = 1e-6, int max_iters = 400);

inline RootSet roots(const UniPoly<QC>& p, double cluster_tol = 1e-6, int max_iters = 400) {
  return roots(to_cd_normalized(p), cluster_tol, max_iters);
}

/// Real roots of a real-coefficient polynomial (conjugate pairs dropped).
std::vector<double> real_roots(const UniPoly<CD>& p, double imag_tol = 1e-8);

}  // namespace curvelab
