#include "curvelab/resultant.hpp"

#include <Eigen/Dense>
#include <numbers>

namespace curvelab {

namespace {

// ---- exact determinants via Gaussian-integer Bareiss ----

struct GI {  // element of Z[i]
  mpz_class re, im;
  bool zero() const { return re == 0 && im == 0; }
};

GI gi_mul(const GI& a, const GI& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GI gi_sub(const GI& a, const GI& b) { return {a.re - b.re, a.im - b.im}; }

// a / b, known exact (Bareiss pivots divide exactly in any integral domain)
GI gi_divexact(const GI& a, const GI& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  GI num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  GI q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

mpz_class lcm_denoms(const std::vector<QC>& row) {
  mpz_class l = 1;
  for (const auto& z : row) {
    mpz_class d1 = z.re.get_den(), d2 = z.im.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
  }
  return l;
}

}  // namespace

QC det_exact(std::vector<std::vector<QC>> m) {
  const size_t n = m.size();
  if (n == 0) return QC(1);
  // scale rows to Gaussian integers, remembering the factor
  mpq_class factor = 1;
  std::vector<std::vector<GI>> a(n, std::vector<GI>(n));
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = lcm_denoms(m[i]);
    factor /= mpq_class(l);
    for (size_t j = 0; j < n; ++j) {
      mpq_class re = m[i][j].re * l, im = m[i][j].im * l;
      a[i][j] = {re.get_num(), im.get_num()};
    }
  }
  GI prev{mpz_class(1), mpz_class(0)};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].zero()) {
      size_t p = k + 1;
      while (p < n && a[p][k].zero()) ++p;
      if (p == n) return QC(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = gi_divexact(gi_sub(gi_mul(a[k][k], a[i][j]), gi_mul(a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  QC det(mpq_class(a[n - 1][n - 1].re), mpq_class(a[n - 1][n - 1].im));
  if (sign < 0) det = -det;
  return QC(det.re * factor, det.im * factor);
}

CD det_float(const std::vector<std::vector<CD>>& m) {
  const long n = static_cast<long>(m.size());
  if (n == 0) return CD(1.0);
  Eigen::MatrixXcd a(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant();
}

namespace {

// Sylvester matrix with formal degrees m = #fc-1, n = #gc-1; the first n
// rows carry f. Entry type is whatever the coefficient lists hold.
template <class R>
std::vector<std::vector<R>> sylvester(const std::vector<R>& fc, const std::vector<R>& gc,
                                      const R& zero) {
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  const int N = m + n;
  std::vector<std::vector<R>> s(static_cast<size_t>(N), std::vector<R>(static_cast<size_t>(N), zero));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = fc[static_cast<size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = gc[static_cast<size_t>(n - j)];
  return s;
}

template <class K>
K resultant_scalar(const UniPoly<K>& f, const UniPoly<K>& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw NumericError("resultant with zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) throw NumericError("resultant of two constants");
  if (f.degree() == 0) {  // lc(f)^{deg g} with no roots: Res = f^{deg g}
    K r(1);
    for (int i = 0; i < g.degree(); ++i) r = r * f.c[0];
    return r;
  }
  if (g.degree() == 0) {
    K r(1);
    for (int i = 0; i < f.degree(); ++i) r = r * g.c[0];
    return r;
  }
  auto s = sylvester(f.c, g.c, K(0));
  if constexpr (is_exact_v<K>) {
    return det_exact(std::move(s));
  } else {
    return det_float(s);
  }
}

}  // namespace

QC resultant(const UniPoly<QC>& f, const UniPoly<QC>& g) { return resultant_scalar(f, g); }
CD resultant(const UniPoly<CD>& f, const UniPoly<CD>& g) { return resultant_scalar(f, g); }

UniPoly<QC> interpolate(const std::vector<QC>& nodes, const std::vector<QC>& values) {
  const size_t n = nodes.size();
  // divided differences
  std::vector<QC> dd = values;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - k]);
      if (i == k) break;
    }
  // Newton form -> monomial coefficients
  UniPoly<QC> p;
  for (size_t i = n; i-- > 0;) {
    p = p * UniPoly<QC>(std::vector<QC>{-nodes[i], QC(1)}) + UniPoly<QC>::constant(dd[i]);
  }
  return p;
}

MultiPoly<QC> exact_div(const MultiPoly<QC>& a, const MultiPoly<QC>& b) {
  if (b.is_zero_poly()) throw NumericError("division by zero polynomial");
  MultiPoly<QC> r = a, q(a.nvars);
  while (!r.is_zero_poly()) {
    const Expo& er = r.exps.front();
    const Expo& eb = b.exps.front();
    Expo eq(er.size());
    for (size_t v = 0; v < er.size(); ++v) {
      if (er[v] < eb[v]) throw NumericError("inexact polynomial division");
      eq[v] = static_cast<std::uint8_t>(er[v] - eb[v]);
    }
    QC cq = r.coefs.front() / b.coefs.front();
    auto t = MultiPoly<QC>::monomial(a.nvars, eq, cq);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

std::vector<int> active_vars(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var) {
  std::vector<int> act;
  for (int v = 0; v < f.nvars; ++v) {
    if (v == var) continue;
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) act.push_back(v);
  }
  return act;
}

template <class K>
void check_resultant_inputs(const MultiPoly<K>& f, const MultiPoly<K>& g, int var) {
  if (f.is_zero_poly() || g.is_zero_poly()) throw NumericError("resultant with zero polynomial");
  if (f.degree_in(var) == 0 && g.degree_in(var) == 0)
    throw NumericError("resultant: both inputs have degree 0 in the eliminated variable");
}

// interpolation degree bound for Res_t(f, g) in the remaining variables
template <class K>
int interp_degree_bound(const MultiPoly<K>& f, const MultiPoly<K>& g, int var, int xvar) {
  return f.degree_in(var) * g.degree_in(xvar) + g.degree_in(var) * f.degree_in(xvar);
}

}  // namespace

MultiPoly<QC> resultant_bareiss(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var) {
  check_resultant_inputs(f, g, var);
  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  if (fc.size() == 1) {
    MultiPoly<QC> r = MultiPoly<QC>::constant(f.nvars, QC(1));
    for (size_t i = 1; i < gc.size(); ++i) r = r * fc[0];
    return r;
  }
  if (gc.size() == 1) {
    MultiPoly<QC> r = MultiPoly<QC>::constant(f.nvars, QC(1));
    for (size_t i = 1; i < fc.size(); ++i) r = r * gc[0];
    return r;
  }
  auto s = sylvester(fc, gc, MultiPoly<QC>::zero(f.nvars));
  const size_t n = s.size();
  MultiPoly<QC> prev = MultiPoly<QC>::constant(f.nvars, QC(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (s[k][k].is_zero_poly()) {
      size_t p = k + 1;
      while (p < n && s[p][k].is_zero_poly()) ++p;
      if (p == n) return MultiPoly<QC>::zero(f.nvars);
      std::swap(s[k], s[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        s[i][j] = exact_div(s[k][k] * s[i][j] - s[i][k] * s[k][j], prev);
    prev = s[k][k];
  }
  auto det = s[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

// Exact interpolation route: one or two active variables.
MultiPoly<QC> resultant_interp_exact(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var,
                                     const std::vector<int>& act) {
  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  const int nv = f.nvars;

  auto specialize_coeff = [&](const MultiPoly<QC>& c, const std::vector<QC>& point) {
    QC acc(0);
    for (size_t i = 0; i < c.coefs.size(); ++i) {
      QC t = c.coefs[i];
      for (size_t a = 0; a < act.size(); ++a)
        for (int j = 0; j < c.exps[i][static_cast<size_t>(act[a])]; ++j) t *= point[a];
      acc += t;
    }
    return acc;
  };
  auto value_at = [&](const std::vector<QC>& point) {
    std::vector<QC> fs, gs;
    fs.reserve(fc.size());
    gs.reserve(gc.size());
    for (const auto& c : fc) fs.push_back(specialize_coeff(c, point));
    for (const auto& c : gc) gs.push_back(specialize_coeff(c, point));
    return det_exact(sylvester(fs, gs, QC(0)));
  };

  if (act.empty()) {
    return MultiPoly<QC>::constant(nv, value_at({}));
  }
  const int x = act[0];
  const int dx = interp_degree_bound(f, g, var, x);
  std::vector<QC> xnodes;
  for (int i = 0; i <= dx; ++i) xnodes.push_back(QC(i - dx / 2));

  if (act.size() == 1) {
    std::vector<QC> vals;
    vals.reserve(xnodes.size());
    for (const auto& xn : xnodes) vals.push_back(value_at({xn}));
    auto up = interpolate(xnodes, vals);
    MultiPoly<QC> out(nv);
    for (size_t i = 0; i < up.c.size(); ++i) {
      if (is_zero(up.c[i])) continue;
      Expo e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(x)] = static_cast<std::uint8_t>(i);
      out.exps.push_back(std::move(e));
      out.coefs.push_back(up.c[i]);
    }
    out.canonicalize();
    return out;
  }

  // two active variables: tensor interpolation
  const int y = act[1];
  const int dy = interp_degree_bound(f, g, var, y);
  std::vector<QC> ynodes;
  for (int i = 0; i <= dy; ++i) ynodes.push_back(QC(i - dy / 2));

  // for each y node, interpolate in x; then interpolate coefficients in y
  std::vector<UniPoly<QC>> xpolys;
  xpolys.reserve(ynodes.size());
  for (const auto& yn : ynodes) {
    std::vector<QC> vals;
    vals.reserve(xnodes.size());
    for (const auto& xn : xnodes) vals.push_back(value_at({xn, yn}));
    xpolys.push_back(interpolate(xnodes, vals));
  }
  MultiPoly<QC> out(nv);
  for (int i = 0; i <= dx; ++i) {
    std::vector<QC> col;
    col.reserve(ynodes.size());
    for (const auto& xp : xpolys) col.push_back(xp.coeff(i));
    auto yp = interpolate(ynodes, col);
    for (size_t j = 0; j < yp.c.size(); ++j) {
      if (is_zero(yp.c[j])) continue;
      Expo e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(x)] = static_cast<std::uint8_t>(i);
      e[static_cast<size_t>(y)] = static_cast<std::uint8_t>(j);
      out.exps.push_back(std::move(e));
      out.coefs.push_back(yp.c[j]);
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace

MultiPoly<QC> resultant(const MultiPoly<QC>& f, const MultiPoly<QC>& g, int var) {
  check_resultant_inputs(f, g, var);
  auto act = active_vars(f, g, var);
  const int syl = f.degree_in(var) + g.degree_in(var);
  if (act.size() <= 2 && syl >= 6) return resultant_interp_exact(f, g, var, act);
  if (act.size() <= 2 && syl >= 2 && (f.nterms() + g.nterms()) > 40)
    return resultant_interp_exact(f, g, var, act);
  return resultant_bareiss(f, g, var);
}

MultiPoly<CD> resultant(const MultiPoly<CD>& f, const MultiPoly<CD>& g, int var) {
  check_resultant_inputs(f, g, var);
  std::vector<int> act;
  for (int v = 0; v < f.nvars; ++v) {
    if (v == var) continue;
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) act.push_back(v);
  }
  if (act.size() > 2) throw NumericError("float resultant supports at most two free variables");

  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  const int nv = f.nvars;
  auto specialize_coeff = [&](const MultiPoly<CD>& c, const std::vector<CD>& point) {
    CD acc(0.0);
    for (size_t i = 0; i < c.coefs.size(); ++i) {
      CD t = c.coefs[i];
      for (size_t a = 0; a < act.size(); ++a)
        for (int j = 0; j < c.exps[i][static_cast<size_t>(act[a])]; ++j) t *= point[a];
      acc += t;
    }
    return acc;
  };
  auto value_at = [&](const std::vector<CD>& point) {
    std::vector<CD> fs, gs;
    for (const auto& c : fc) fs.push_back(specialize_coeff(c, point));
    for (const auto& c : gc) gs.push_back(specialize_coeff(c, point));
    if (fs.size() == 1) {
      CD r(1.0);
      for (size_t i = 1; i < gs.size(); ++i) r *= fs[0];
      return r;
    }
    if (gs.size() == 1) {
      CD r(1.0);
      for (size_t i = 1; i < fs.size(); ++i) r *= gs[0];
      return r;
    }
    return det_float(sylvester(fs, gs, CD(0.0)));
  };

  if (act.empty()) return MultiPoly<CD>::constant(nv, value_at({}));

  // evaluate on roots of unity, recover coefficients by inverse DFT
  auto unit_nodes = [](int count) {
    std::vector<CD> nodes;
    nodes.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
      double th = 2.0 * std::numbers::pi * k / count;
      nodes.emplace_back(std::cos(th), std::sin(th));
    }
    return nodes;
  };
  auto idft = [](const std::vector<CD>& vals) {
    const size_t N = vals.size();
    std::vector<CD> out(N);
    for (size_t m = 0; m < N; ++m) {
      CD acc(0.0);
      for (size_t k = 0; k < N; ++k) {
        double th = -2.0 * std::numbers::pi * static_cast<double>(m * k) / static_cast<double>(N);
        acc += vals[k] * CD(std::cos(th), std::sin(th));
      }
      out[m] = acc / static_cast<double>(N);
    }
    return out;
  };

  const int x = act[0];
  const int Dx = f.degree_in(var) * g.degree_in(x) + g.degree_in(var) * f.degree_in(x);
  auto xn = unit_nodes(Dx + 1);
  if (act.size() == 1) {
    std::vector<CD> vals;
    for (const auto& node : xn) vals.push_back(value_at({node}));
    auto cf = idft(vals);
    MultiPoly<CD> out(nv);
    for (size_t i = 0; i < cf.size(); ++i) {
      Expo e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(x)] = static_cast<std::uint8_t>(i);
      out.exps.push_back(std::move(e));
      out.coefs.push_back(cf[i]);
    }
    out.canonicalize();
    return out;
  }
  const int y = act[1];
  const int Dy = f.degree_in(var) * g.degree_in(y) + g.degree_in(var) * f.degree_in(y);
  auto yn = unit_nodes(Dy + 1);
  std::vector<std::vector<CD>> grid(yn.size());
  for (size_t j = 0; j < yn.size(); ++j) {
    std::vector<CD> vals;
    for (const auto& node : xn) vals.push_back(value_at({node, yn[j]}));
    grid[j] = idft(vals);  // x-coefficients at y node j
  }
  MultiPoly<CD> out(nv);
  for (size_t i = 0; i < xn.size(); ++i) {
    std::vector<CD> col(yn.size());
    for (size_t j = 0; j < yn.size(); ++j) col[j] = grid[j][i];
    auto cy = idft(col);
    for (size_t j = 0; j < cy.size(); ++j) {
      Expo e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(x)] = static_cast<std::uint8_t>(i);
      e[static_cast<size_t>(y)] = static_cast<std::uint8_t>(j);
      out.exps.push_back(std::move(e));
      out.coefs.push_back(cy[j]);
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace curvelab
