#pragma once

// Sparse exact polynomials in the fixed variable set {h, hp, q}, where hp
// stands for h'. Every h-number (binomials, Fibonacci values, q-analogues)
// is an HPoly.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hfib/rational.hpp"

namespace hfib {

enum class Var { h, hp, q };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::h: return "h";
    case Var::hp: return "hp";
    case Var::q: return "q";
  }
  return "?";
}

struct Monomial {
  unsigned h = 0;
  unsigned hp = 0;
  unsigned q = 0;

  unsigned degree() const { return h + hp + q; }
  unsigned exponent(Var v) const {
    switch (v) {
      case Var::h: return h;
      case Var::hp: return hp;
      case Var::q: return q;
    }
    return 0;
  }
  bool is_constant() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.h + b.h, a.hp + b.hp, a.q + b.q};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: ascending total degree, then lexicographic with
/// h > hp > q (higher h exponent first within a degree).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.h != b.h) return a.h > b.h;
    if (a.hp != b.hp) return a.hp > b.hp;
    return a.q > b.q;
  }
};

class HPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, MonomialOrder>;

  HPoly() = default;
  HPoly(long c) : HPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  HPoly(const BigRational& c) {             // NOLINT(google-explicit-constructor)
    if (!hfib::is_zero(c)) terms_.emplace(Monomial{}, c);
  }

  static HPoly var(Var v) { return monomial(unit(v), BigRational(1)); }
  static HPoly h() { return var(Var::h); }
  static HPoly hp() { return var(Var::hp); }
  static HPoly q() { return var(Var::q); }

  static HPoly monomial(const Monomial& m, const BigRational& c) {
    HPoly p;
    p.add_term(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  bool contains(Var v) const { return degree_in(v) > 0; }

  void add_term(const Monomial& m, const BigRational& c) {
    if (hfib::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (hfib::is_zero(it->second)) terms_.erase(it);
    }
  }

  HPoly& operator+=(const HPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  HPoly& operator*=(const HPoly& o) {
    *this = *this * o;
    return *this;
  }
  HPoly& operator*=(const BigRational& s) {
    if (hfib::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator-(HPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  friend HPoly operator*(HPoly a, const BigRational& s) { return a *= s; }
  friend HPoly operator*(const BigRational& s, HPoly a) { return a *= s; }
  friend HPoly operator*(HPoly a, long s) { return a *= BigRational(s); }
  friend HPoly operator*(long s, HPoly a) { return a *= BigRational(s); }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms_ == b.terms_; }

 private:
  static Monomial unit(Var v) {
    switch (v) {
      case Var::h: return {1, 0, 0};
      case Var::hp: return {0, 1, 0};
      case Var::q: return {0, 0, 1};
    }
    return {};
  }

  TermMap terms_;
};

/// Integer power. Negative exponents would need Laurent terms and are rejected.
inline HPoly pow(const HPoly& base, long exponent) {
  if (exponent < 0) {
    throw std::domain_error("negative exponent: Laurent polynomials are not representable");
  }
  HPoly result(1);
  HPoly b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

/// (start)(start + step)...(start + (count-1)·step); 1 when count = 0.
inline HPoly shifted_factorial(const HPoly& start, const BigRational& step, unsigned count) {
  HPoly result(1);
  for (unsigned j = 0; j < count; ++j) result *= start + HPoly(BigRational(step * j));
  return result;
}

/// h^k · (h')_{1;k}, the image of D^k under the evaluation map.
inline HPoly h_rising(unsigned k) {
  return pow(HPoly::h(), k) * shifted_factorial(HPoly::hp(), BigRational(1), k);
}

/// Substitutes hp -> hp + delta and re-expands.
inline HPoly shift_hprime(const HPoly& p, long delta) {
  if (delta == 0) return p;
  // (hp + delta)^e expanded once per distinct exponent
  std::map<unsigned, HPoly> shifted_powers;
  const HPoly base = HPoly::hp() + HPoly(delta);
  HPoly result;
  for (const auto& [m, c] : p.terms()) {
    auto it = shifted_powers.find(m.hp);
    if (it == shifted_powers.end()) it = shifted_powers.emplace(m.hp, pow(base, m.hp)).first;
    HPoly rest = HPoly::monomial(Monomial{m.h, 0, m.q}, c);
    result += rest * it->second;
  }
  return result;
}

/// Sets q = 1, leaving a polynomial in h and hp.
inline HPoly specialize_q1(const HPoly& p) {
  HPoly result;
  for (const auto& [m, c] : p.terms()) result.add_term(Monomial{m.h, m.hp, 0}, c);
  return result;
}

inline BigRational eval_point(const HPoly& p, const BigRational& h, const BigRational& hp,
                              const BigRational& q) {
  BigRational total(0);
  for (const auto& [m, c] : p.terms()) {
    total += c * rational_pow(h, m.h) * rational_pow(hp, m.hp) * rational_pow(q, m.q);
  }
  return total;
}

class DivergentLimitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Value of p under hp = 1/h, h -> 0. Substitution sends h^a·hp^b to
/// h^(a-b), so the limit keeps exactly the diagonal a = b and diverges if
/// any a < b term is present.
inline BigRational classical_limit(const HPoly& p) {
  if (p.contains(Var::q)) throw std::invalid_argument("classical_limit: polynomial contains q");
  BigRational total(0);
  for (const auto& [m, c] : p.terms()) {
    if (m.h < m.hp) {
      throw DivergentLimitError("classical_limit diverges: monomial with h-exponent " +
                                std::to_string(m.h) + " < hp-exponent " + std::to_string(m.hp));
    }
    if (m.h == m.hp) total += c;
  }
  return total;
}

namespace detail {

inline void append_factor(std::string& out, const char* name, unsigned e, bool& first) {
  if (e == 0) return;
  if (!first) out += '*';
  out += name;
  if (e > 1) out += '^' + std::to_string(e);
  first = false;
}

}  // namespace detail

/// Text rendering in canonical order, e.g. "1 + 3*h*hp + h^2*hp + h^2*hp^2".
inline std::string to_string(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : p.terms()) {
    BigRational mag = abs(c);
    if (leading) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    leading = false;
    std::string factors;
    bool first = true;
    detail::append_factor(factors, "h", m.h, first);
    detail::append_factor(factors, "hp", m.hp, first);
    detail::append_factor(factors, "q", m.q, first);
    if (factors.empty()) {
      out += to_display_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_display_string(mag) + "*" + factors;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << to_string(p); }

}  // namespace hfib
