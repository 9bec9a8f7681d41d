#pragma once

// Identity suites over Q[D]: matrix powers, Cassini/Catalan/d'Ocagne, the
// binomial-sum theorems and the Binet route.

#include <string>
#include <vector>

#include "hfib/h_fibonacci.hpp"
#include "hfib/identity_report.hpp"
#include "hfib/operators.hpp"

namespace hfib {

namespace detail {

inline auto op_renderer() {
  return [](const OpPoly& p) { return to_string(p); };
}

inline auto matrix_renderer() {
  return [](const OpMatrix2& m) { return to_string(m); };
}

inline std::string mn(const char* a, long x, const char* b, long y) {
  return std::string(a) + "=" + std::to_string(x) + "," + b + "=" + std::to_string(y);
}

/// D^j as an operator.
inline OpPoly dpow(unsigned j) { return OpPoly::D(j); }

}  // namespace detail

/// Q^n = [[F_{n+1}, F_n], [D·F_n, D·F_{n-1}]] structurally, and its
/// evaluation against the h-numbers with shifted superscripts.
inline IdentityReport verify_qh_power(unsigned n_max) {
  IdentityReport report("qh-power");
  const auto F = fib_op_sequence(n_max + 1);
  const OpPoly D = OpPoly::D();
  const HPoly hhp = HPoly::h() * HPoly::hp();
  HFibCache fib;
  auto prender = detail::poly_renderer();
  for (unsigned n = 1; n <= n_max; ++n) {
    const OpMatrix2 q = qh_power(n);
    const std::string p = detail::nstr("n", n);
    report.check(p + " structure", q, OpMatrix2{F[n + 1], F[n], D * F[n], D * F[n - 1]},
                 detail::matrix_renderer());
    report.check(p + " eval(1,1)", op_eval(q.a11), fib.get(n + 1), prender);
    report.check(p + " eval(1,2)", op_eval(q.a12), fib.get(n), prender);
    report.check(p + " eval(2,1)", op_eval(q.a21), hhp * fib.shifted(n, 1), prender);
    report.check(p + " eval(2,2)", op_eval(q.a22), hhp * fib.shifted(n - 1, 1), prender);
  }
  return report;
}

/// op_eval(D·x) = h·hp·shift_hprime(op_eval(x), 1) on the given operators.
inline IdentityReport verify_composition_rule(const std::vector<OpPoly>& samples) {
  IdentityReport report("composition-rule");
  const HPoly hhp = HPoly::h() * HPoly::hp();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    report.check("sample " + std::to_string(i), op_eval(OpPoly::D() * samples[i]),
                 hhp * shift_hprime(op_eval(samples[i]), 1), detail::poly_renderer());
  }
  return report;
}

/// F_{n+1}F_{n-1} − F_n² = (−1)^n D^{n−1}, plus det(Q^n) = (det Q)^n = (−D)^n.
inline IdentityReport cassini_check(unsigned n_max) {
  IdentityReport report("cassini");
  const auto F = fib_op_sequence(n_max + 1);
  auto render = detail::op_renderer();
  const OpPoly det_q = qh_matrix().det();
  report.check("det Q", det_q, -OpPoly::D(), render);
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::string p = detail::nstr("n", n);
    report.check(p, F[n + 1] * F[n - 1] - F[n] * F[n], OpPoly(sign_pow(n)) * detail::dpow(n - 1), render);
    report.check(p + " det", qh_power(n).det(), pow(det_q, n), render);
  }
  return report;
}

/// The four addition formulas from Q^{m+n} = Q^m·Q^n.
inline IdentityReport addition_check(unsigned m_max, unsigned n_max) {
  IdentityReport report("addition");
  const auto F = fib_op_sequence(m_max + n_max + 1);
  const OpPoly D = OpPoly::D();
  auto render = detail::op_renderer();
  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned n = 1; n <= n_max; ++n) {
      const std::string p = detail::mn("m", m, "n", n);
      report.check(p + " (1)", F[m + n + 1], F[m + 1] * F[n + 1] + D * F[m] * F[n], render);
      report.check(p + " (2)", F[m + n], F[m + 1] * F[n] + D * F[m] * F[n - 1], render);
      report.check(p + " (3)", F[m + n], F[m] * F[n + 1] + D * F[m - 1] * F[n], render);
      report.check(p + " (4)", F[m + n - 1], F[m] * F[n] + D * F[m - 1] * F[n - 1], render);
      report.check(p + " matrix", qh_power(m + n), qh_power(m) * qh_power(n), detail::matrix_renderer());
    }
  }
  return report;
}

/// Q² = Q + D·I, Q^k = F_k·Q + D·F_{k−1}·I, and the inverse-power forms
/// stated multiplicatively so everything stays polynomial:
///   Q^k · (−1)^k [[D F_{k−1}, −F_k], [−D F_k, F_{k+1}]] = D^k·I
///   Q^k · (−1)^{k+1} (F_k Q − F_{k+1} I) = D^k·I
inline IdentityReport cayley_hamilton_check(unsigned k_max) {
  IdentityReport report("cayley-hamilton");
  const auto F = fib_op_sequence(k_max + 1);
  const OpPoly D = OpPoly::D();
  const OpMatrix2 Q = qh_matrix();
  const OpMatrix2 I = OpMatrix2::identity();
  auto render = detail::matrix_renderer();
  report.check("k=2 characteristic", Q * Q, Q + D * I, render);
  for (unsigned k = 2; k <= k_max; ++k) {
    const std::string p = detail::nstr("k", k);
    const OpMatrix2 qk = qh_power(k);
    report.check(p, qk, F[k] * Q + (D * F[k - 1]) * I, render);
  }
  for (unsigned k = 1; k <= k_max; ++k) {
    const std::string p = detail::nstr("k", k);
    const OpMatrix2 qk = qh_power(k);
    const OpMatrix2 scaled_inverse =
        OpPoly(sign_pow(k)) * OpMatrix2{D * F[k - 1], -F[k], -(D * F[k]), F[k + 1]};
    report.check(p + " inverse", qk * scaled_inverse, detail::dpow(k) * I, render);
    const OpMatrix2 reduced_inverse = OpPoly(sign_pow(k + 1)) * (F[k] * Q - F[k + 1] * I);
    report.check(p + " reduced inverse", qk * reduced_inverse, detail::dpow(k) * I, render);
  }
  return report;
}

/// Σ_{i=0}^n C(n,i) D^{n−i} F_k^i F_{k−1}^{n−i} F_i = F_{kn}.
inline IdentityReport index_multiple_check(unsigned n_max, unsigned k_max) {
  IdentityReport report("index-multiple");
  const auto F = fib_op_sequence(n_max * k_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 1; k <= k_max; ++k) {
      OpPoly lhs;
      for (unsigned i = 0; i <= n; ++i) {
        lhs += OpPoly(BigRational(binomial(n, i))) * detail::dpow(n - i) * pow(F[k], i) *
               pow(F[k - 1], n - i) * F[i];
      }
      report.check(detail::mn("n", n, "k", k), lhs, F[k * n], detail::op_renderer());
    }
  }
  return report;
}

/// Σ_{i=0}^n C(n,i) (−1)^{i+1} F_k^i F_{k+1}^{n−i} F_i = F_{kn}.
inline IdentityReport index_multiple_alternating_check(unsigned n_max, unsigned k_max) {
  IdentityReport report("index-multiple-alternating");
  const auto F = fib_op_sequence(n_max * k_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 1; k <= k_max; ++k) {
      OpPoly lhs;
      for (unsigned i = 0; i <= n; ++i) {
        lhs += OpPoly(BigRational(binomial(n, i)) * sign_pow(i + 1)) * pow(F[k], i) * pow(F[k + 1], n - i) * F[i];
      }
      report.check(detail::mn("n", n, "k", k), lhs, F[k * n], detail::op_renderer());
    }
  }
  return report;
}

/// F_{n−m}F_{n+m} − F_n² = (−1)^{n+1−m} D^{n−m} F_m², 1 ≤ m ≤ n.
inline IdentityReport catalan_check(unsigned n_max) {
  IdentityReport report("catalan");
  const auto F = fib_op_sequence(2 * n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      report.check(detail::mn("n", n, "m", m), F[n - m] * F[n + m] - F[n] * F[n],
                   OpPoly(sign_pow(long(n) + 1 - long(m))) * detail::dpow(n - m) * F[m] * F[m],
                   detail::op_renderer());
    }
  }
  return report;
}

/// F_m F_{n+1} − F_{m+1} F_n = (−1)^n D^n F_{m−n} for m ≥ n; for m < n the
/// D-cleared form (−1)^n D^m g_{n−m}, with g the negative-index operator.
inline IdentityReport docagne_check(unsigned m_max, unsigned n_max) {
  IdentityReport report("docagne");
  const auto F = fib_op_sequence(std::max(m_max, n_max) + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    for (unsigned n = 1; n <= n_max; ++n) {
      const OpPoly lhs = F[m] * F[n + 1] - F[m + 1] * F[n];
      OpPoly rhs;
      std::string branch;
      if (m >= n) {
        rhs = OpPoly(sign_pow(n)) * detail::dpow(n) * F[m - n];
        branch = " m>=n";
      } else {
        rhs = OpPoly(sign_pow(n)) * detail::dpow(m) * neg_fib_op(n - m).g;
        branch = " m<n";
      }
      report.check(detail::mn("m", m, "n", n) + branch, lhs, rhs, detail::op_renderer());
    }
  }
  report.pin("stated for n > m while the right side uses F_{m-n}",
             "m >= n uses F_{m-n}; m < n uses the D-cleared negative-index operator D^m g_{n-m}");
  return report;
}

/// Σ_{i=1}^n C(n,i) D^{n−i} F_i = F_{2n}.
inline IdentityReport operator_binomial_sum_check(unsigned n_max) {
  IdentityReport report("operator-binomial-sum");
  const auto F = fib_op_sequence(2 * n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    OpPoly lhs;
    for (unsigned i = 1; i <= n; ++i) lhs += OpPoly(BigRational(binomial(n, i))) * detail::dpow(n - i) * F[i];
    report.check(detail::nstr("n", n), lhs, F[2 * n], detail::op_renderer());
  }
  return report;
}

/// Σ_{i=1}^n C(n,i) (−1)^{n−i} F_i = (−1)^{n−1} F_n.
inline IdentityReport operator_alternating_sum_check(unsigned n_max) {
  IdentityReport report("operator-alternating-sum");
  const auto F = fib_op_sequence(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    OpPoly lhs;
    for (unsigned i = 1; i <= n; ++i) lhs += OpPoly(BigRational(binomial(n, i)) * sign_pow(long(n - i))) * F[i];
    report.check(detail::nstr("n", n), lhs, OpPoly(sign_pow(long(n) - 1)) * F[n], detail::op_renderer());
  }
  return report;
}

/// g_n = (−1)^{n−1} F_n.
inline IdentityReport neg_index_op_check(unsigned n_max) {
  IdentityReport report("negative-index-operator");
  for (unsigned n = 1; n <= n_max; ++n) {
    report.check(detail::nstr("n", n), neg_fib_op(n).g, OpPoly(sign_pow(long(n) - 1)) * fib_op(n),
                 detail::op_renderer());
  }
  return report;
}

/// fib_op (closed form) = recurrence = Binet.
inline IdentityReport binet_check(unsigned n_max) {
  IdentityReport report("binet");
  const auto rec = fib_op_sequence(n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    report.check(detail::nstr("n", n) + " recurrence", fib_op(n), rec[n], detail::op_renderer());
    report.check(detail::nstr("n", n) + " binet", fib_op(n), binet_fib(n), detail::op_renderer());
  }
  return report;
}

/// Symmetric functions of λ± used by the Binet reductions.
inline IdentityReport symmetric_function_check() {
  IdentityReport report("binet-symmetric-functions");
  const SqrtExt lp = SqrtExt::lambda_plus();
  const SqrtExt lm = SqrtExt::lambda_minus();
  const OpPoly D = OpPoly::D();
  auto as_ext = [](const OpPoly& p) { return SqrtExt{p, OpPoly(0)}; };
  auto render = [](const SqrtExt& x) { return to_string(x); };
  report.check("l+ + l-", lp + lm, as_ext(OpPoly(1)), render);
  report.check("l+ * l-", lp * lm, as_ext(-D), render);
  report.check("l+ - l-", lp - lm, SqrtExt::s(), render);
  report.check("(l+ - l-)^2", (lp - lm) * (lp - lm), as_ext(SqrtExt::radicand()), render);
  report.check("l+^2 + l-^2", pow(lp, 2) + pow(lm, 2), as_ext(OpPoly(1) + OpPoly(2) * D), render);
  report.check("(l+ l-)^2", pow(lp * lm, 2), as_ext(pow(D, 2)), render);
  report.check("l+^3 + l-^3", pow(lp, 3) + pow(lm, 3), as_ext(OpPoly(1) + OpPoly(3) * D), render);
  report.check("l+^2 l- + l+ l-^2", pow(lp, 2) * lm + lp * pow(lm, 2), as_ext(-D), render);
  report.check("(l+ l-)^3", pow(lp * lm, 3), as_ext(-pow(D, 3)), render);
  report.check("1 - l- = l+", as_ext(OpPoly(1)) - lm, lp, render);
  return report;
}

}  // namespace hfib
