// Brute-force searches over the candidate readings of ambiguous statements.
// Each search must select exactly the reading frozen in
// tests/golden/conventions.json by the independent oracle, and the library
// default must be that reading.

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hfib/hfib.hpp"
#include "support/golden.hpp"

using namespace hfib;

namespace {

std::set<std::string> golden_set(const char* key) {
  std::set<std::string> out;
  for (const auto& v : test_support::conventions().at(key)) out.insert(v.get<std::string>());
  return out;
}

}  // namespace

TEST(ConventionSearch, ColumnSumLowerBound) {
  const std::map<std::string, ColumnSumBound> candidates = {{"from_one", ColumnSumBound::from_one},
                                                             {"from_j", ColumnSumBound::from_j}};
  std::set<std::string> passing;
  for (const auto& [name, b] : candidates) {
    if (verify_column_sum(12, b).passed()) passing.insert(name);
  }
  EXPECT_EQ(passing, golden_set("column_sum"));
  ASSERT_EQ(passing.size(), 1u);
  EXPECT_EQ(candidates.at(*passing.begin()), kColumnSumBound);
}

TEST(ConventionSearch, BinomialSumWeight) {
  const HFibCache fib;
  std::set<std::string> passing;
  for (auto f : {BinomialSumForm::literal, BinomialSumForm::weighted}) {
    if (verify_binomial_sum(10, f, fib).passed()) passing.insert(to_string(f));
  }
  EXPECT_EQ(passing, golden_set("binomial_sum"));
  ASSERT_EQ(passing.size(), 1u);
  EXPECT_EQ(to_string(kBinomialSumForm), *passing.begin());
}

TEST(ConventionSearch, AlternatingBinomialSumWeight) {
  const HFibCache fib;
  std::set<std::string> passing;
  for (auto f : {BinomialSumForm::literal, BinomialSumForm::weighted}) {
    if (verify_alternating_binomial_sum(12, f, fib).passed()) passing.insert(to_string(f));
  }
  EXPECT_EQ(passing, golden_set("alternating_binomial_sum"));
  ASSERT_EQ(passing.size(), 1u);
  EXPECT_EQ(to_string(kAlternatingSumForm), *passing.begin());
}

TEST(ConventionSearch, FibTableRowNineTopTerm) {
  const unsigned expected = test_support::conventions().at("fib_table_row9_top_h_exponent").get<unsigned>();
  EXPECT_EQ(hfib_diagonal(9).degree_in(Var::h), expected);
  EXPECT_NE(printed_fib_table().at(9).back().h_exp, expected);
}

TEST(ConventionSearch, QhBinomialReading) {
  std::set<std::string> passing;
  if (verify_qh_recurrences(5, &qh_binomial).passed()) passing.insert("plain");
  if (verify_qh_recurrences(5, &qh_binomial_qbracket).passed()) passing.insert("q_bracket");
  EXPECT_EQ(passing, golden_set("qh_binomial_reading"));
}

TEST(ConventionSearch, QFibonacciSummationBound) {
  auto recovers_h_numbers = [](auto&& qfib) {
    for (unsigned n = 1; n <= 12; ++n) {
      if (specialize_q1(qfib(n)) != hfib_diagonal(n)) return false;
    }
    return true;
  };
  std::set<std::string> passing;
  if (recovers_h_numbers(q_fibonacci)) passing.insert("floor((n-1)/2)");
  if (recovers_h_numbers(q_fibonacci_printed_bound)) passing.insert("floor((n-2)/2)");
  EXPECT_EQ(passing, golden_set("q_fibonacci_index_n_bound"));
}

TEST(ConventionSearch, ShiftedGeneratingFunctionSign) {
  auto matches = [](int sign) {
    for (unsigned m = 1; m <= 4; ++m) {
      const OpRatFun f{{fib_op(m), OpPoly(sign) * OpPoly::D() * fib_op(m - 1)}, gf::fib_denominator()};
      const OpSeries s = series_expand(f, 8);
      for (unsigned n = 0; n < 8; ++n) {
        if (s[n] != fib_op(m + n)) return false;
      }
    }
    return true;
  };
  std::set<std::string> passing;
  if (matches(1)) passing.insert("+D");
  if (matches(-1)) passing.insert("-D");
  EXPECT_EQ(passing, golden_set("shifted_gf_numerator_sign"));
  for (unsigned m = 1; m <= 4; ++m) {
    EXPECT_EQ(gf_shifted(m).numerator, trim(XPoly{fib_op(m), OpPoly::D() * fib_op(m - 1)})) << m;
  }
}
