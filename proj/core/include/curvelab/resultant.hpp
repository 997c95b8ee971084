#pragma once

#include "curvelab/multipoly.hpp"
#include "curvelab/unipoly.hpp"

namespace curvelab {

// Resultant convention used throughout: Res_t(f,g) = lc(f)^{deg g} * prod_i g(r_i)
// over the roots r_i of f, equal to the determinant of the Sylvester matrix
// with f occupying the first deg(g) rows. disc(p) = Res(p, p') / lc(p).

/// Scalar resultant of two univariate polynomials.
QC resultant(const UniPoly<QC>& f, const UniPoly<QC>& g);
CD resultant(const UniPoly<CD>& f, const UniPoly<CD>& g);

template <class K>
K discriminant(const UniPoly<K>& p) {
  if (p.degree() < 1) throw NumericError("discriminant of a constant");
  return resultant(p, derivative(p)) / p.leading();
}

/// Resultant eliminating variable `var` from two multivariate polynomials.
/// Exact inputs use integer-node interpolation of scalar Sylvester
/// determinants (or fraction-free elimination for small cases); float inputs
/// interpolate at roots of unity. Throws if both inputs have degree 0 in
/// `var` or either is zero.
MultiPoly<QC> resultant(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var);
MultiPoly<CD> resultant(const MultiPoly<CD>& f, const MultiPoly<CD>& g, int var);

/// Fraction-free (Bareiss) route over the polynomial ring; independent of
/// the interpolation route, kept callable for cross-checking.
MultiPoly<QC> resultant_bareiss(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var);

/// Exact determinant of a small dense rational-complex matrix.
QC det_exact(std::vector<std::vector<QC>> m);
CD det_float(const std::vector<std::vector<CD>>& m);

/// Exact leading-term division of multivariate polynomials; throws if the
/// division is not exact.
MultiPoly<QC> exact_div(const MultiPoly<QC>& a, const MultiPoly<QC>& b);

/// Newton interpolation through (nodes[i], values[i]) with distinct nodes.
UniPoly<QC> interpolate(const std::vector<QC>& nodes, const std::vector<QC>& values);

}  // namespace curvelab
