#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "curvelab/scalar.hpp"
#include "curvelab/unipoly.hpp"

namespace curvelab {

using Expo = std::vector<std::uint8_t>;

/// Sparse multivariate polynomial over K in {QC, CD}. Terms are kept in
/// descending grlex order with nonzero coefficients and distinct exponents.
template <class K>
struct MultiPoly {
  int nvars = 0;
  std::vector<Expo> exps;
  std::vector<K> coefs;

  MultiPoly() = default;
  explicit MultiPoly(int nv) : nvars(nv) {}

  static MultiPoly zero(int nv) { return MultiPoly(nv); }
  static MultiPoly constant(int nv, K k) {
    MultiPoly p(nv);
    if (!is_zero(k)) {
      p.exps.push_back(Expo(static_cast<size_t>(nv), 0));
      p.coefs.push_back(std::move(k));
    }
    return p;
  }
  static MultiPoly monomial(int nv, Expo e, K k) {
    MultiPoly p(nv);
    if (!is_zero(k)) {
      p.exps.push_back(std::move(e));
      p.coefs.push_back(std::move(k));
    }
    return p;
  }
  static MultiPoly variable(int nv, int i, K k = K(1)) {
    Expo e(static_cast<size_t>(nv), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(nv, std::move(e), std::move(k));
  }

  size_t nterms() const { return coefs.size(); }
  bool is_zero_poly() const { return coefs.empty(); }

  static int expo_degree(const Expo& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  // grlex: higher total degree first, then lexicographically larger exponent first
  static bool grlex_less(const Expo& a, const Expo& b) {
    int da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    return a < b;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& e : exps) d = std::max(d, expo_degree(e));
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& e : exps) d = std::max(d, static_cast<int>(e[static_cast<size_t>(var)]));
    return d;
  }

  void canonicalize() {
    std::map<Expo, K, bool (*)(const Expo&, const Expo&)> acc(&grlex_less);
    for (size_t i = 0; i < coefs.size(); ++i) acc[exps[i]] = (acc.count(exps[i]) ? acc[exps[i]] + coefs[i] : coefs[i]);
    exps.clear();
    coefs.clear();
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
      if (is_zero(it->second)) continue;
      exps.push_back(it->first);
      coefs.push_back(it->second);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& k : r.coefs) k = -k;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r.exps.insert(r.exps.end(), b.exps.begin(), b.exps.end());
    r.coefs.insert(r.coefs.end(), b.coefs.begin(), b.coefs.end());
    r.canonicalize();
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars);
    for (size_t i = 0; i < a.coefs.size(); ++i)
      for (size_t j = 0; j < b.coefs.size(); ++j) {
        Expo e = a.exps[i];
        for (size_t v = 0; v < e.size(); ++v)
          e[v] = static_cast<std::uint8_t>(e[v] + b.exps[j][v]);
        r.exps.push_back(std::move(e));
        r.coefs.push_back(a.coefs[i] * b.coefs[j]);
      }
    r.canonicalize();
    return r;
  }
  friend MultiPoly operator*(const K& k, const MultiPoly& p) {
    MultiPoly r = p;
    for (auto& c : r.coefs) c = k * c;
    r.canonicalize();
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.exps == b.exps && a.coefs == b.coefs;
  }

  K eval(std::span<const K> x) const {
    K acc(0);
    for (size_t i = 0; i < coefs.size(); ++i) {
      K t = coefs[i];
      for (size_t v = 0; v < exps[i].size(); ++v)
        for (int j = 0; j < exps[i][v]; ++j) t *= x[v];
      acc += t;
    }
    return acc;
  }

  /// Magnitude estimate Sum |c| |x|^e, the natural residual scale.
  double eval_mag(std::span<const CD> x) const {
    double acc = 0.0;
    for (size_t i = 0; i < coefs.size(); ++i) {
      double t = std::abs(to_cd(coefs[i]));
      for (size_t v = 0; v < exps[i].size(); ++v)
        for (int j = 0; j < exps[i][v]; ++j) t *= std::abs(x[v]);
      acc += t;
    }
    return acc;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars);
    for (size_t i = 0; i < coefs.size(); ++i) {
      auto e = exps[i][static_cast<size_t>(var)];
      if (e == 0) continue;
      Expo ne = exps[i];
      ne[static_cast<size_t>(var)] = static_cast<std::uint8_t>(e - 1);
      r.exps.push_back(std::move(ne));
      r.coefs.push_back(K(static_cast<long>(e)) * coefs[i]);
    }
    r.canonicalize();
    return r;
  }

  /// Coefficients as a polynomial in `var` over the remaining-variable ring
  /// (the variable slot stays in place with exponent zero).
  std::vector<MultiPoly> coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(nvars));
    for (size_t i = 0; i < coefs.size(); ++i) {
      Expo e = exps[i];
      auto k = e[static_cast<size_t>(var)];
      e[static_cast<size_t>(var)] = 0;
      out[k].exps.push_back(std::move(e));
      out[k].coefs.push_back(coefs[i]);
    }
    for (auto& p : out) p.canonicalize();
    return out;
  }

  /// Substitute each variable by an affine-linear combination of the new
  /// variables: x_i -> sum_j A[i][j] y_j + b[i].
  MultiPoly substitute_affine(const std::vector<std::vector<K>>& A,
                              const std::vector<K>& b) const {
    int nv_new = A.empty() ? nvars : static_cast<int>(A[0].size());
    std::vector<MultiPoly> forms;
    for (int i = 0; i < nvars; ++i) {
      MultiPoly f = MultiPoly::constant(nv_new, b[static_cast<size_t>(i)]);
      for (int j = 0; j < nv_new; ++j)
        f = f + MultiPoly::variable(nv_new, j, A[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      forms.push_back(f);
    }
    // cache powers of each substituted form
    std::vector<std::vector<MultiPoly>> pw(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
      pw[static_cast<size_t>(i)].push_back(MultiPoly::constant(nv_new, K(1)));
    MultiPoly r(nv_new);
    for (size_t t = 0; t < coefs.size(); ++t) {
      MultiPoly term = MultiPoly::constant(nv_new, coefs[t]);
      for (int i = 0; i < nvars; ++i) {
        auto e = exps[t][static_cast<size_t>(i)];
        auto& cache = pw[static_cast<size_t>(i)];
        while (cache.size() <= e) cache.push_back(cache.back() * forms[static_cast<size_t>(i)]);
        if (e > 0) term = term * cache[e];
      }
      r = r + term;
    }
    return r;
  }

  MultiPoly shift(std::span<const K> center) const {
    std::vector<std::vector<K>> A(static_cast<size_t>(nvars),
                                  std::vector<K>(static_cast<size_t>(nvars), K(0)));
    for (int i = 0; i < nvars; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(i)] = K(1);
    std::vector<K> b(center.begin(), center.end());
    return substitute_affine(A, b);
  }

  /// Truncate to total degree <= order.
  MultiPoly truncated(int order) const {
    MultiPoly r(nvars);
    for (size_t i = 0; i < coefs.size(); ++i)
      if (expo_degree(exps[i]) <= order) {
        r.exps.push_back(exps[i]);
        r.coefs.push_back(coefs[i]);
      }
    r.canonicalize();
    return r;
  }
};

/// Taylor jet at a point: the recentred polynomial truncated at total
/// degree `order`; jet coefficients are the scaled partial derivatives.
template <class K>
MultiPoly<K> eval_jet(const MultiPoly<K>& f, std::span<const K> point, int order) {
  return f.shift(point).truncated(order);
}

inline MultiPoly<CD> to_cd(const MultiPoly<QC>& p) {
  MultiPoly<CD> r(p.nvars);
  r.exps = p.exps;
  r.coefs.reserve(p.coefs.size());
  for (const auto& k : p.coefs) r.coefs.push_back(to_cd(k));
  r.canonicalize();
  return r;
}

inline MultiPoly<CD> to_cd_normalized(const MultiPoly<QC>& p) {
  long m = 0;
  for (const auto& k : p.coefs) m = std::max(m, approx_log2(k));
  MultiPoly<CD> r(p.nvars);
  r.exps = p.exps;
  for (const auto& k : p.coefs) r.coefs.push_back(to_cd(scale_pow2(k, m)));
  r.canonicalize();
  return r;
}

template <class K>
MultiPoly<K> conj(const MultiPoly<K>& p) {
  MultiPoly<K> r = p;
  for (auto& k : r.coefs) k = conj(k);
  return r;
}

template <class K>
bool is_real_poly(const MultiPoly<K>& p, double tol = 0.0) {
  for (const auto& k : p.coefs) {
    if constexpr (is_exact_v<K>) {
      if (!(k.im == 0)) return false;
      (void)tol;
    } else {
      if (std::abs(k.imag()) > tol) return false;
    }
  }
  return true;
}

}  // namespace curvelab
