#pragma once

// Truncated power series in x over Q[D], rational generating functions and
// the weighted-series identity.
//
// Every denominator is written directly in Q[D][x]; the λ±-products of the
// printed forms are reduced with the symmetric-function identities checked
// in symmetric_function_check().

#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfib/identity_report.hpp"
#include "hfib/operator_identities.hpp"
#include "hfib/operators.hpp"

namespace hfib {

/// Polynomial in x; index k holds the coefficient of x^k.
using XPoly = std::vector<OpPoly>;

inline XPoly trim(XPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline XPoly mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(std::move(r));
}

/// Coefficients of x^0 .. x^{order-1}.
class OpSeries {
 public:
  explicit OpSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
  }
  OpSeries(std::size_t order, const XPoly& p) : OpSeries(order) {
    for (std::size_t k = 0; k < std::min(order, p.size()); ++k) coeffs_[k] = p[k];
  }

  std::size_t order() const { return coeffs_.size(); }
  const OpPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  OpPoly& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<OpPoly>& coefficients() const { return coeffs_; }

  friend OpSeries operator*(const OpSeries& a, const OpSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    OpSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend OpSeries operator+(const OpSeries& a, const OpSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    OpSeries r(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend bool operator==(const OpSeries&, const OpSeries&) = default;

 private:
  std::vector<OpPoly> coeffs_;
};

struct OpRatFun {
  XPoly numerator;
  XPoly denominator;
};

/// Long division: s with s·denominator ≡ numerator (mod x^order). The
/// denominator's constant term must be 1.
inline OpSeries series_expand(const OpRatFun& f, std::size_t order) {
  if (f.denominator.empty() || f.denominator[0] != OpPoly(1)) {
    throw std::domain_error("series_expand: denominator constant term must be 1");
  }
  OpSeries s(order);
  for (std::size_t k = 0; k < order; ++k) {
    OpPoly c = k < f.numerator.size() ? f.numerator[k] : OpPoly();
    for (std::size_t j = 1; j <= k && j < f.denominator.size(); ++j) c -= f.denominator[j] * s[k - j];
    s[k] = std::move(c);
  }
  return s;
}

namespace gf {

inline OpPoly D(unsigned k = 1) { return OpPoly::D(k); }

/// 1 − (1+2D)x + D²x² = (1 − λ₊²x)(1 − λ₋²x).
inline XPoly even_denominator() { return {OpPoly(1), -(OpPoly(1) + OpPoly(2) * D()), D(2)}; }

/// 1 − x − D x² = (1 − λ₊x)(1 − λ₋x).
inline XPoly fib_denominator() { return {OpPoly(1), OpPoly(-1), -D()}; }

/// 1 + D x = 1 − λ₊λ₋ x.
inline XPoly product_factor() { return {OpPoly(1), D()}; }

}  // namespace gf

inline OpRatFun gf_fib() { return {{OpPoly(0), OpPoly(1)}, gf::fib_denominator()}; }

inline OpRatFun gf_even() { return {{OpPoly(0), OpPoly(1)}, gf::even_denominator()}; }

inline OpRatFun gf_odd() { return {{OpPoly(1), -gf::D()}, gf::even_denominator()}; }

/// (F_m + D·F_{m−1}·x)/(1 − x − D x²). The printed statement has
/// "+ λ₊λ₋", i.e. −D; its own derivation and the m = 2 coefficient give +D.
inline OpRatFun gf_shifted(unsigned m) {
  if (m == 0) throw std::invalid_argument("gf_shifted: m must be positive");
  return {trim({fib_op(m), gf::D() * fib_op(m - 1)}), gf::fib_denominator()};
}

inline OpRatFun gf_square() {
  return {{OpPoly(0), OpPoly(1), -gf::D()}, mul(gf::even_denominator(), gf::product_factor())};
}

inline OpRatFun gf_product() {
  return {{OpPoly(0), OpPoly(1)}, mul(gf::even_denominator(), gf::product_factor())};
}

inline OpRatFun gf_product_shift() { return {{OpPoly(1)}, mul(gf::even_denominator(), gf::product_factor())}; }

/// Denominator (1 − (1+3D)x − D³x²)(1 + Dx − D³x²), numerator x − 2Dx² − D³x³.
inline OpRatFun gf_cube() {
  const XPoly a{OpPoly(1), -(OpPoly(1) + OpPoly(3) * gf::D()), -gf::D(3)};
  const XPoly b{OpPoly(1), gf::D(), -gf::D(3)};
  return {{OpPoly(0), OpPoly(1), OpPoly(-2) * gf::D(), -gf::D(3)}, mul(a, b)};
}

/// A named generating function with the closed form its coefficients must match.
struct GfCase {
  std::string name;
  OpRatFun f;
  std::function<OpPoly(unsigned)> expected;
};

inline std::vector<GfCase> gf_cases(unsigned shift_m_max = 4) {
  std::vector<GfCase> cases = {
      {"fib", gf_fib(), [](unsigned k) { return fib_op(k); }},
      {"even", gf_even(), [](unsigned k) { return fib_op(2 * k); }},
      {"odd", gf_odd(), [](unsigned k) { return fib_op(2 * k + 1); }},
      {"square", gf_square(), [](unsigned k) { return pow(fib_op(k), 2); }},
      {"product", gf_product(), [](unsigned k) { return fib_op(k) * fib_op(k + 1); }},
      {"product-shift", gf_product_shift(), [](unsigned k) { return fib_op(k + 1) * fib_op(k + 2); }},
      {"cube", gf_cube(), [](unsigned k) { return pow(fib_op(k), 3); }},
  };
  for (unsigned m = 1; m <= shift_m_max; ++m) {
    cases.push_back({"shift:" + std::to_string(m), gf_shifted(m), [m](unsigned k) { return fib_op(m + k); }});
  }
  return cases;
}

/// Parses a --which selector: fib, even, odd, shift:m, square, product,
/// product-shift, cube.
inline std::optional<OpRatFun> gf_by_name(const std::string& which) {
  if (which == "fib") return gf_fib();
  if (which == "even") return gf_even();
  if (which == "odd") return gf_odd();
  if (which == "square") return gf_square();
  if (which == "product") return gf_product();
  if (which == "product-shift") return gf_product_shift();
  if (which == "cube") return gf_cube();
  if (which.rfind("shift:", 0) == 0) {
    const std::string digits = which.substr(6);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const unsigned long m = std::stoul(digits);
    if (m == 0 || m > 100000) return std::nullopt;
    return gf_shifted(unsigned(m));
  }
  return std::nullopt;
}

/// Coefficient match, re-multiplication, and the shifted/plain relation.
inline IdentityReport verify_generating_functions(unsigned order) {
  IdentityReport report("generating-functions");
  auto render = detail::op_renderer();
  for (const auto& c : gf_cases()) {
    const OpSeries s = series_expand(c.f, order);
    for (unsigned k = 0; k < order; ++k) {
      report.check(c.name + " k=" + std::to_string(k), s[k], c.expected(k), render);
    }
    const OpSeries back = s * OpSeries(order, c.f.denominator);
    const OpSeries num(order, c.f.numerator);
    for (unsigned k = 0; k < order; ++k) {
      report.check(c.name + " remultiply k=" + std::to_string(k), back[k], num[k], render);
    }
  }
  const OpSeries plain = series_expand(gf_fib(), order + 1);
  const OpSeries shifted = series_expand(gf_shifted(1), order);
  for (unsigned k = 0; k < order; ++k) {
    report.check("shift:1 vs fib k=" + std::to_string(k), shifted[k], plain[k + 1], render);
  }
  report.pin("shifted generating function printed with numerator F_m + λ₊λ₋ F_{m-1} x",
             "numerator F_m + D F_{m-1} x (= F_m - λ₊λ₋ F_{m-1} x), matching the derivation and the m = 2 "
             "coefficient");
  report.merge(symmetric_function_check());
  return report;
}

struct WeightedSeriesResult {
  BigRational fib_side;       // Σ_{i=0}^N F_i(h,hp)/p^{i+1}
  BigRational geometric_side;  // Σ_{j=0}^N h^j (hp)_{1;j} (p²−p)^{−(j+1)}
  BigRational difference;
  BigRational last_fib_term;
  BigRational last_geometric_term;
  bool agree = false;
};

class NonConvergentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Σ F_i/p^{i+1} = 1/(p² − p − D), compared after evaluation: the left
/// side summed through i = N, the right side as the geometric series in
/// D/(p² − p) through j = N. Both truncations must have a last term
/// below tol in magnitude, otherwise the configuration is rejected.
inline WeightedSeriesResult weighted_series_check(const BigRational& p, const BigRational& h,
                                                  const BigRational& hp, unsigned order, const BigRational& tol) {
  if (is_zero(p)) throw std::invalid_argument("weighted series: p must be nonzero");
  const BigRational base = p * p - p;
  if (is_zero(base)) throw std::invalid_argument("weighted series: p^2 - p must be nonzero");
  WeightedSeriesResult r;
  BigRational p_pow = p;  // p^{i+1}
  const auto F = fib_op_sequence(order);
  for (unsigned i = 0; i <= order; ++i) {
    r.last_fib_term = eval_point(op_eval(F[i]), h, hp, BigRational(0)) / p_pow;
    r.fib_side += r.last_fib_term;
    p_pow *= p;
  }
  BigRational weight(1);  // h^j (hp)_{1;j}
  BigRational base_pow = base;
  for (unsigned j = 0; j <= order; ++j) {
    if (j > 0) weight *= h * (hp + (j - 1));
    r.last_geometric_term = weight / base_pow;
    r.geometric_side += r.last_geometric_term;
    base_pow *= base;
  }
  r.difference = r.fib_side - r.geometric_side;
  const bool converged = abs(r.last_fib_term) < tol && abs(r.last_geometric_term) < tol;
  if (!converged) {
    std::ostringstream msg;
    msg << std::scientific << std::setprecision(3) << "weighted series not converged at order " << order
        << ": last terms " << to_double(r.last_fib_term) << " and " << to_double(r.last_geometric_term)
        << " are not below tol; use a smaller |h| or a larger order";
    throw NonConvergentError(msg.str());
  }
  r.agree = abs(r.difference) < tol;
  return r;
}

/// p² − p = f_m + 1 for (p, m) = (2,1), (3,5), (8,10), (10,11).
inline IdentityReport verify_classical_weight_bullets() {
  IdentityReport report("weighted-series-classical");
  const auto f = classical_fibonacci(11);
  const std::vector<std::pair<long, unsigned>> bullets = {{2, 1}, {3, 5}, {8, 10}, {10, 11}};
  for (const auto& [p, m] : bullets) {
    report.check("p=" + std::to_string(p) + ",f_" + std::to_string(m), BigInteger(p * p - p),
                 BigInteger(f[m] + 1), [](const BigInteger& v) { return v.get_str(); });
  }
  return report;
}

}  // namespace hfib
