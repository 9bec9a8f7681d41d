#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hfib {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d" (decimal, optional leading sign).
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  BigRational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Like parse_rational, but also takes exact decimals such as "0.1" or "1e-12".
inline BigRational parse_number(std::string_view text) {
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d{1,6}))?)");
  std::string s(text);
  if (s.find('/') != std::string::npos) return parse_rational(s);
  std::smatch m;
  if (!std::regex_match(s, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw std::invalid_argument("malformed number: " + s);
  }
  const std::string frac = m[3].str();
  const BigInteger digits(m[2].str() + frac);
  long exponent = (m[4].matched ? std::stol(m[4].str()) : 0) - long(frac.size());
  BigInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  BigRational r = exponent < 0 ? BigRational(digits, scale) : BigRational(digits * scale);
  r.canonicalize();
  return m[1] == "-" ? BigRational(-r) : r;
}

/// Always "num/den", the wire form used by the JSON schema.
inline std::string to_fraction_string(const BigRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "num" for integers, "num/den" otherwise; used by the text renderers.
inline std::string to_display_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

inline BigRational rational_pow(const BigRational& base, unsigned exponent) {
  BigRational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), exponent);
  BigRational r(num.get_num(), den.get_num());
  r.canonicalize();
  return r;
}

inline BigInteger binomial(unsigned long n, unsigned long k) {
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInteger factorial(unsigned long n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline double to_double(const BigRational& r) { return r.get_d(); }

}  // namespace hfib
