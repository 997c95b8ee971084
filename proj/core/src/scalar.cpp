#include "curvelab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace curvelab {

double to_double(const mpq_class& q) { return mpq_get_d(q.get_mpq_t()); }

long approx_log2(const mpq_class& q) {
  if (q == 0) return 0;
  long nbits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long dbits = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  return nbits - dbits;
}

long approx_log2(const QC& z) {
  return std::max(approx_log2(z.re), approx_log2(z.im));
}

QC scale_pow2(const QC& z, long k) {
  QC r = z;
  if (k > 0) {
    mpq_div_2exp(r.re.get_mpq_t(), z.re.get_mpq_t(), static_cast<unsigned long>(k));
    mpq_div_2exp(r.im.get_mpq_t(), z.im.get_mpq_t(), static_cast<unsigned long>(k));
  } else if (k < 0) {
    mpq_mul_2exp(r.re.get_mpq_t(), z.re.get_mpq_t(), static_cast<unsigned long>(-k));
    mpq_mul_2exp(r.im.get_mpq_t(), z.im.get_mpq_t(), static_cast<unsigned long>(-k));
  }
  return r;
}

namespace {

// d == 2^a 5^b? if so give the needed power of 10.
bool decimal_denominator(mpz_class d, unsigned long& pow10) {
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  if (d != 1) return false;
  pow10 = std::max(twos, fives);
  return pow10 <= 40;  // keep printed strings short
}

}  // namespace

std::string format_rational(const mpq_class& q) {
  if (q == 0) return "0";
  mpz_class num = q.get_num(), den = q.get_den();
  if (den == 1) return num.get_str();
  unsigned long p = 0;
  if (decimal_denominator(den, p)) {
    mpz_class ten10;
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, p);
    mpz_class scaled = num * (ten10 / den);
    bool neg = scaled < 0;
    std::string digits = (neg ? mpz_class(-scaled) : scaled).get_str();
    if (digits.size() <= p) digits.insert(0, p + 1 - digits.size(), '0');
    digits.insert(digits.size() - p, ".");
    return (neg ? "-" : "") + digits;
  }
  return num.get_str() + "/" + den.get_str();
}

mpq_class parse_rational(const std::string& s) {
  std::string v = s;
  v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
  if (v.empty()) throw NumericError("empty number string");
  auto slash = v.find('/');
  if (slash != std::string::npos) {
    mpq_class q(v);
    q.canonicalize();
    return q;
  }
  // decimal with optional exponent
  long exp10 = 0;
  auto epos = v.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtol(v.c_str() + epos + 1, nullptr, 10);
    v = v.substr(0, epos);
  }
  auto dot = v.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(v.size() - dot - 1);
    v.erase(dot, 1);
  }
  if (v.empty() || v == "-" || v == "+") throw NumericError("bad number string: " + s);
  mpq_class q{mpz_class(v)};
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0) q *= p10; else q /= p10;
  q.canonicalize();
  return q;
}

}  // namespace curvelab
