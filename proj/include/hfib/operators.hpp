#pragma once

// The commutative operator ring Q[D] with D standing for -h·d/dt, 2x2
// matrices over it, and the quadratic extension Q[D][s]/(s^2 - (1 + 4D))
// holding the Binet eigenvalues.
//
// D is never applied as a differential operator. Everything the theory needs
// is D^k acting on t^{-h'} at t = 1, which op_eval captures as
// D^k -> h^k·(h')_{1;k}.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfib/hpoly.hpp"

namespace hfib {

class OpPoly {
 public:
  using CoeffMap = std::map<unsigned, BigRational>;

  OpPoly() = default;
  OpPoly(long c) : OpPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  OpPoly(const BigRational& c) {              // NOLINT(google-explicit-constructor)
    add_term(0, c);
  }

  static OpPoly D(unsigned power = 1) {
    OpPoly p;
    p.add_term(power, BigRational(1));
    return p;
  }

  const CoeffMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigRational coefficient(unsigned power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? BigRational(0) : it->second;
  }

  /// Degree in D; -1 for the zero operator.
  long degree() const { return coeffs_.empty() ? -1 : long(coeffs_.rbegin()->first); }

  void add_term(unsigned power, const BigRational& c) {
    if (hfib::is_zero(c)) return;
    auto [it, inserted] = coeffs_.emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (hfib::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  OpPoly& operator+=(const OpPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }
  OpPoly& operator-=(const OpPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
  }
  OpPoly& operator*=(const OpPoly& o) { return *this = *this * o; }

  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator-(OpPoly a) {
    for (auto& [k, c] : a.coeffs_) c = -c;
    return a;
  }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b) {
    OpPoly r;
    for (const auto& [ka, ca] : a.coeffs_) {
      for (const auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
    }
    return r;
  }
  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  CoeffMap coeffs_;
};

inline OpPoly pow(const OpPoly& base, unsigned exponent) {
  OpPoly result(1);
  OpPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// (-1)^n as a scalar.
inline long sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Rendering in ascending powers, e.g. "1 + 3*D + D^2".
inline std::string to_string(const OpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [k, c] : p.coefficients()) {
    BigRational mag = abs(c);
    if (leading) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    leading = false;
    std::string d = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    if (d.empty()) {
      out += to_display_string(mag);
    } else if (mag == 1) {
      out += d;
    } else {
      out += to_display_string(mag) + "*" + d;
    }
  }
  return out;
}

/// F_n = Σ_{k=0}^{⌊(n-1)/2⌋} C(n-1-k, k)·D^k, with F_0 = 0.
inline OpPoly fib_op(unsigned n) {
  OpPoly r;
  if (n == 0) return r;
  for (unsigned k = 0; 2 * k <= n - 1; ++k) r.add_term(k, BigRational(binomial(n - 1 - k, k)));
  return r;
}

/// F_n by F_{n+1} = F_n + D·F_{n-1}.
inline std::vector<OpPoly> fib_op_sequence(unsigned n_max) {
  std::vector<OpPoly> seq{OpPoly(0), OpPoly(1)};
  const OpPoly d = OpPoly::D();
  while (seq.size() <= n_max) {
    const auto n = seq.size();
    seq.push_back(seq[n - 1] + d * seq[n - 2]);
  }
  seq.resize(n_max + 1);
  return seq;
}

/// D^k -> h^k·(h')_{1;k}, extended linearly.
inline HPoly op_eval(const OpPoly& x) {
  HPoly r;
  for (const auto& [k, c] : x.coefficients()) r += h_rising(k) * c;
  return r;
}

/// op_eval(D^j·x) = h^j·(h')_{1;j}·op_eval(x)(hp + j). For j = 1 this is
/// h·hp·shift_hprime(op_eval(x), 1).
inline HPoly op_eval_after_powers(const HPoly& evaluated, unsigned j) {
  return h_rising(j) * shift_hprime(evaluated, long(j));
}

struct OpMatrix2 {
  OpPoly a11, a12, a21, a22;

  static OpMatrix2 identity() { return {OpPoly(1), OpPoly(0), OpPoly(0), OpPoly(1)}; }

  OpPoly det() const { return a11 * a22 - a12 * a21; }

  /// adj(M), so that M·adj(M) = det(M)·I.
  OpMatrix2 adjugate() const { return {a22, -a12, -a21, a11}; }

  friend OpMatrix2 operator*(const OpMatrix2& x, const OpMatrix2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend OpMatrix2 operator+(const OpMatrix2& x, const OpMatrix2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend OpMatrix2 operator-(const OpMatrix2& x, const OpMatrix2& y) {
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
  }
  friend OpMatrix2 operator*(const OpPoly& s, const OpMatrix2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
  }
  friend bool operator==(const OpMatrix2&, const OpMatrix2&) = default;
};

inline std::string to_string(const OpMatrix2& m) {
  return "[[" + to_string(m.a11) + ", " + to_string(m.a12) + "], [" + to_string(m.a21) + ", " +
         to_string(m.a22) + "]]";
}

/// Q = [[1, 1], [D, 0]].
inline OpMatrix2 qh_matrix() { return {OpPoly(1), OpPoly(1), OpPoly::D(), OpPoly(0)}; }

inline OpMatrix2 qh_power(unsigned n) {
  OpMatrix2 result = OpMatrix2::identity();
  OpMatrix2 base = qh_matrix();
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

/// even + odd·s with s^2 = 1 + 4D.
struct SqrtExt {
  OpPoly even;
  OpPoly odd;

  static OpPoly radicand() { return OpPoly(1) + OpPoly(4) * OpPoly::D(); }
  static SqrtExt s() { return {OpPoly(0), OpPoly(1)}; }

  /// λ± = (1 ± s)/2.
  static SqrtExt lambda_plus() { return {OpPoly(make_rational(1, 2)), OpPoly(make_rational(1, 2))}; }
  static SqrtExt lambda_minus() { return {OpPoly(make_rational(1, 2)), OpPoly(make_rational(-1, 2))}; }

  friend SqrtExt operator+(const SqrtExt& x, const SqrtExt& y) { return {x.even + y.even, x.odd + y.odd}; }
  friend SqrtExt operator-(const SqrtExt& x, const SqrtExt& y) { return {x.even - y.even, x.odd - y.odd}; }
  friend SqrtExt operator*(const SqrtExt& x, const SqrtExt& y) {
    return {x.even * y.even + x.odd * y.odd * radicand(), x.even * y.odd + x.odd * y.even};
  }
  friend bool operator==(const SqrtExt&, const SqrtExt&) = default;
};

inline SqrtExt pow(const SqrtExt& base, unsigned exponent) {
  SqrtExt result{OpPoly(1), OpPoly(0)};
  SqrtExt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

inline std::string to_string(const SqrtExt& x) {
  return "(" + to_string(x.even) + ") + (" + to_string(x.odd) + ")*s";
}

/// (λ₊ⁿ − λ₋ⁿ)/(λ₊ − λ₋). The difference is a pure multiple of s, and
/// λ₊ − λ₋ = s, so the quotient is its s-coefficient.
inline OpPoly binet_fib(unsigned n) {
  const SqrtExt diff = pow(SqrtExt::lambda_plus(), n) - pow(SqrtExt::lambda_minus(), n);
  if (!diff.even.is_zero()) {
    throw std::logic_error("binet_fib: nonzero rational part in λ₊ⁿ − λ₋ⁿ at n = " + std::to_string(n));
  }
  return diff.odd;
}

/// g_n = D^n·F_{-n}, kept D-cleared so it stays inside Q[D].
struct NegIndexOp {
  unsigned n = 0;
  OpPoly g;
};

/// g_n = -g_{n-1} + D·g_{n-2}, g_0 = 0, g_1 = 1.
inline NegIndexOp neg_fib_op(unsigned n) {
  if (n == 0) throw std::invalid_argument("neg_fib_op: n must be positive");
  OpPoly prev(0), cur(1);
  const OpPoly d = OpPoly::D();
  for (unsigned k = 2; k <= n; ++k) {
    OpPoly next = -cur + d * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

}  // namespace hfib
