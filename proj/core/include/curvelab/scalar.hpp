#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace curvelab {

using CD = std::complex<double>;

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact complex number with rational real and imaginary parts.
/// Arithmetic is error-free; division by zero throws.
struct QC {
  mpq_class re, im;

  QC() : re(0), im(0) {}
  QC(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  QC(const mpq_class& r) : re(r), im(0) {}  // NOLINT
  QC(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  QC(long num, long den) : re(mpq_class(num, den)), im(0) { re.canonicalize(); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  QC operator-() const { return QC(-re, -im); }
  QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
  QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
  QC& operator*=(const QC& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  QC& operator/=(const QC& o) {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (n == 0) throw NumericError("QC division by zero");
    mpq_class r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend QC operator+(QC a, const QC& b) { return a += b; }
  friend QC operator-(QC a, const QC& b) { return a -= b; }
  friend QC operator*(QC a, const QC& b) { return a *= b; }
  friend QC operator/(QC a, const QC& b) { return a /= b; }
  friend bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QC& a, const QC& b) { return !(a == b); }
};

inline QC conj(const QC& z) { return QC(z.re, -z.im); }
inline bool is_zero(const QC& z) { return z.is_zero(); }
inline bool is_zero(const CD& z) { return z == CD(0.0, 0.0); }

/// Guard for the float backend: no NaN/Inf may escape an operation.
inline CD checked(const CD& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NumericError("non-finite float value");
  return z;
}

double to_double(const mpq_class& q);
inline CD to_cd(const QC& z) { return CD(to_double(z.re), to_double(z.im)); }
inline CD to_cd(const CD& z) { return z; }

/// Base-2 magnitude estimate that is safe for rationals far outside
/// double range; returns 0 for zero.
long approx_log2(const mpq_class& q);
long approx_log2(const QC& z);

/// z / 2^k, exact.
QC scale_pow2(const QC& z, long k);

// String forms. Exact values print as plain decimals when the denominator
// is 2^a 5^b, otherwise as "p/q". parse_rational accepts integers, decimals
// (with exponent), and fractions.
std::string format_rational(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

template <class K>
inline constexpr bool is_exact_v = std::is_same_v<K, QC>;

}  // namespace curvelab
