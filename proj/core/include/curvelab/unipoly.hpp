#pragma once

#include <span>
#include <string>
#include <vector>

#include "curvelab/scalar.hpp"

namespace curvelab {

/// Dense univariate polynomial c[0] + c[1] x + ... over K in {QC, CD}.
/// Leading coefficient is nonzero unless the polynomial is zero (empty).
template <class K>
struct UniPoly {
  std::vector<K> c;
  std::string var = "t";

  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs, std::string v = "t")
      : c(std::move(coeffs)), var(std::move(v)) {
    trim();
  }

  static UniPoly constant(K k, std::string v = "t") {
    UniPoly p;
    p.var = std::move(v);
    if (!is_zero(k)) p.c.push_back(std::move(k));
    return p;
  }
  static UniPoly identity(std::string v = "t") {
    return UniPoly(std::vector<K>{K(0), K(1)}, std::move(v));
  }

  bool is_zero_poly() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const K& leading() const { return c.back(); }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : K(0);
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  K operator()(const K& x) const {  // Horner
    K acc = K(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.var = a.var;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly{{}, a.var};
    UniPoly r;
    r.var = a.var;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend UniPoly operator*(const K& k, const UniPoly& p) {
    UniPoly r = p;
    for (auto& v : r.c) v = k * v;
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
};

template <class K>
UniPoly<K> derivative(const UniPoly<K>& p) {
  UniPoly<K> r;
  r.var = p.var;
  for (size_t i = 1; i < p.c.size(); ++i) r.c.push_back(K(static_cast<long>(i)) * p.c[i]);
  r.trim();
  return r;
}

template <class K>
UniPoly<K> from_roots(std::span<const K> roots, std::string var = "t") {
  UniPoly<K> p = UniPoly<K>::constant(K(1), var);
  for (const K& r : roots) p = p * UniPoly<K>(std::vector<K>{-r, K(1)}, var);
  return p;
}

/// (t - r)^e convenience factor.
template <class K>
UniPoly<K> linear_power(const K& r, int e, std::string var = "t") {
  UniPoly<K> base(std::vector<K>{-r, K(1)}, var);
  UniPoly<K> acc = UniPoly<K>::constant(K(1), var);
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

/// Division with remainder over a field; throws on zero divisor.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero_poly()) throw NumericError("UniPoly division by zero");
  UniPoly<K> q, r = a;
  q.var = a.var;
  if (a.degree() >= b.degree()) q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
  while (!r.is_zero_poly() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    K f = r.leading() / b.leading();
    q.c[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      r.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

/// Exact quotient; throws if the division leaves a remainder (exact K only).
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  static_assert(is_exact_v<K>, "exact_div requires the exact backend");
  auto [q, r] = divrem(a, b);
  if (!r.is_zero_poly()) throw NumericError("inexact UniPoly division");
  return q;
}

/// Monic gcd over the exact backend.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  static_assert(is_exact_v<K>, "gcd requires the exact backend");
  while (!b.is_zero_poly()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero_poly()) {
    K lead = a.leading();
    for (auto& k : a.c) k = k / lead;
  }
  return a;
}

inline UniPoly<CD> to_cd(const UniPoly<QC>& p) {
  UniPoly<CD> r;
  r.var = p.var;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(to_cd(k));
  r.trim();
  return r;
}

/// Float image scaled by a power of two so the largest coefficient is O(1);
/// exact curves produced by elimination routinely overflow double range.
inline UniPoly<CD> to_cd_normalized(const UniPoly<QC>& p) {
  long m = 0;
  for (const auto& k : p.c) m = std::max(m, approx_log2(k));
  UniPoly<CD> r;
  r.var = p.var;
  for (const auto& k : p.c) r.c.push_back(to_cd(scale_pow2(k, m)));
  r.trim();
  return r;
}

template <class K>
UniPoly<K> conj(const UniPoly<K>& p) {
  UniPoly<K> r = p;
  for (auto& k : r.c) k = conj(k);
  return r;
}

}  // namespace curvelab
