#pragma once

// h-binomial coefficients C(n,k)·h^k·(h')_{1;k}, the h-Pascal triangle and
// the identities relating rows and columns of it.

#include <string>
#include <utility>
#include <vector>

#include "hfib/hpoly.hpp"
#include "hfib/identity_report.hpp"

namespace hfib {

inline HPoly h_binomial(unsigned n, unsigned k) {
  if (k > n) return {};
  return h_rising(k) * BigRational(binomial(n, k));
}

/// Convenience overload so recurrences can index k - 1 at k = 0.
inline HPoly h_binomial_signed(long n, long k) {
  if (n < 0 || k < 0) return {};
  return h_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

struct TriangleRow {
  unsigned n = 0;
  std::vector<HPoly> entries;
};

inline TriangleRow pascal_row(unsigned n) {
  TriangleRow row{n, {}};
  row.entries.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) row.entries.push_back(h_binomial(n, k));
  return row;
}

inline std::vector<TriangleRow> pascal_triangle(unsigned n_max) {
  std::vector<TriangleRow> rows;
  rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) rows.push_back(pascal_row(n));
  return rows;
}

inline HPoly row_sum(unsigned n) {
  HPoly total;
  for (unsigned k = 0; k <= n; ++k) total += h_binomial(n, k);
  return total;
}

/// c_n(z, a) = Σ_k C(n,k)·a^{-k}·(-z)_{1;k}.
inline BigRational charlier(unsigned n, const BigRational& z, const BigRational& a) {
  if (is_zero(a)) throw std::domain_error("charlier: parameter a must be nonzero");
  BigRational total(0);
  BigRational rising(1);  // (-z)_{1;k}
  BigRational a_inv_pow(1);
  const BigRational a_inv = 1 / a;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      rising *= -z + (k - 1);
      a_inv_pow *= a_inv;
    }
    total += BigRational(binomial(n, k)) * a_inv_pow * rising;
  }
  return total;
}

inline IdentityReport verify_pascal_recurrences(unsigned n_max) {
  IdentityReport report("pascal-recurrences");
  const HPoly hhp = HPoly::h() * HPoly::hp();
  auto render = [](const HPoly& p) { return to_string(p); };
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const std::string params = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
      // [n+1, k] = [n, k] + h·hp·[n, k-1](hp+1)
      HPoly rhs = h_binomial(n, k) + hhp * shift_hprime(h_binomial_signed(n, long(k) - 1), 1);
      report.check("additive " + params, h_binomial(n + 1, k), rhs, render);
      // (k+1)·[n+1, k+1] = (n+1)·h·hp·[n, k](hp+1)
      HPoly lhs2 = h_binomial(n + 1, k + 1) * BigRational(k + 1);
      HPoly rhs2 = hhp * shift_hprime(h_binomial(n, k), 1) * BigRational(n + 1);
      report.check("multiplicative " + params, lhs2, rhs2, render);
    }
  }
  return report;
}

inline IdentityReport verify_charlier_rowsum(unsigned n_max,
                                             const std::vector<std::pair<BigRational, BigRational>>& samples) {
  for (const auto& [h, hp] : samples) {
    if (is_zero(h)) throw std::domain_error("verify_charlier_rowsum: sample with h = 0");
  }
  IdentityReport report("charlier-rowsum");
  auto render = [](const BigRational& r) { return to_display_string(r); };
  for (unsigned n = 0; n <= n_max; ++n) {
    const HPoly sum = row_sum(n);
    for (const auto& [h, hp] : samples) {
      const std::string params = "n=" + std::to_string(n) + ",h=" + to_display_string(h) +
                                 ",hp=" + to_display_string(hp);
      report.check(params, eval_point(sum, h, hp, BigRational(0)), charlier(n, -hp, 1 / h), render);
    }
  }
  return report;
}

/// Lower summation bound for the column-sum identity
///   h·(hp + j)·Σ_{i=lo}^{n} [i, j] = [n+1, j+1].
enum class ColumnSumBound {
  from_one,  // literal reading: i starts at 1
  from_j,    // i starts at j (equivalently 0, since [i, j] = 0 for i < j)
};

inline const char* to_string(ColumnSumBound b) {
  return b == ColumnSumBound::from_one ? "sum from i=1" : "sum from i=j";
}

/// Pinned by the brute-force convention search in the test suite; see
/// tests/golden/conventions.json.
inline constexpr ColumnSumBound kColumnSumBound = ColumnSumBound::from_j;

inline HPoly column_sum_lhs(unsigned n, unsigned j, ColumnSumBound bound) {
  const unsigned lo = bound == ColumnSumBound::from_one ? 1 : j;
  HPoly sum;
  for (unsigned i = lo; i <= n; ++i) sum += h_binomial(i, j);
  return HPoly::h() * (HPoly::hp() + HPoly(long(j))) * sum;
}

inline bool column_sum_holds(unsigned n, unsigned j, ColumnSumBound bound) {
  return column_sum_lhs(n, j, bound) == h_binomial(n + 1, j + 1);
}

inline IdentityReport verify_column_sum(unsigned n_max, ColumnSumBound bound = kColumnSumBound) {
  IdentityReport report("column-sum");
  auto render = [](const HPoly& p) { return to_string(p); };
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned j = 0; j < n; ++j) {
      report.check("n=" + std::to_string(n) + ",j=" + std::to_string(j), column_sum_lhs(n, j, bound),
                   h_binomial(n + 1, j + 1), render);
    }
  }
  if (bound == ColumnSumBound::from_j) {
    report.pin("column sum printed with i running from 1; at j = 0 this drops the [0,0] = 1 term",
               "sum runs from i = j (identical to the printed form for j >= 1)");
  }
  return report;
}

}  // namespace hfib
