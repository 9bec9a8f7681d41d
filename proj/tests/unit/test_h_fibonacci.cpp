#include <gtest/gtest.h>

#include <thread>

#include "hfib/h_fibonacci.hpp"
#include "support/golden.hpp"

using namespace hfib;

namespace {

const HPoly h = HPoly::h();
const HPoly hp = HPoly::hp();

HPoly golden_fib(unsigned n) { return hpoly_from_json(test_support::oracle().at("hfib").at(std::to_string(n))); }

}  // namespace

TEST(HFib, DiagonalExamples) {
  EXPECT_EQ(hfib_diagonal(0), HPoly());
  EXPECT_EQ(hfib_diagonal(1), HPoly(1));
  EXPECT_EQ(hfib_diagonal(3), 1 + h * hp);
  EXPECT_EQ(hfib_diagonal(5), 1 + 3 * h * hp + h * h * hp * hp + h * h * hp);
}

TEST(HFib, RecurrenceExamples) {
  EXPECT_EQ(hfib_recurrence(2), HPoly(1));
  EXPECT_EQ(hfib_recurrence(4), 1 + 2 * h * hp);
  const HPoly row7 = 1 + 5 * h * hp + 6 * h * h * hp * (hp + 1) + pow(h, 3) * hp * (hp + 1) * (hp + 2);
  EXPECT_EQ(hfib_recurrence(7), row7);
}

TEST(HFib, HypergeometricExamples) {
  EXPECT_EQ(hfib_hypergeometric(1), HPoly(1));
  for (unsigned n : {1u, 2u, 3u, 5u, 10u}) {
    EXPECT_EQ(hfib_hypergeometric(n),
              hpoly_from_json(test_support::oracle().at("hfib_hypergeometric").at(std::to_string(n))))
        << n;
  }
}

TEST(HFib, AllRoutesMatchOracle) {
  const auto rec = hfib_recurrence_sequence(12);
  for (unsigned n = 0; n <= 12; ++n) {
    const HPoly expected = golden_fib(n);
    EXPECT_EQ(hfib_diagonal(n), expected) << n;
    EXPECT_EQ(rec[n], expected) << n;
    EXPECT_EQ(hfib_operator(n), expected) << n;
    EXPECT_EQ(hfib_binet(n), expected) << n;
    if (n >= 1) {
      EXPECT_EQ(hfib_hypergeometric(n), expected) << n;
    }
  }
}

TEST(HFib, ClassicalColumn) {
  const auto f = classical_fibonacci(30);
  EXPECT_EQ(f[10], 55);
  EXPECT_EQ(f[30], 832040);
  EXPECT_EQ(classical_limit(hfib_diagonal(10)), BigRational(55));
  EXPECT_TRUE(verify_classical_limit(30).passed());
}

TEST(HFib, CacheIsConsistentAcrossThreads) {
  const HFibCache cache;
  std::vector<std::thread> threads;
  std::vector<HPoly> got(8);
  for (unsigned t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { got[t] = cache.get(12 + t % 3); });
  }
  for (auto& th : threads) th.join();
  for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(got[t], hfib_diagonal(12 + t % 3));
  EXPECT_EQ(cache.shifted(5, 2), shift_hprime(hfib_diagonal(5), 2));
}

TEST(NegativeIndex, Examples) {
  EXPECT_EQ(hfib_negative(1).numerator, HPoly(1));
  EXPECT_EQ(hfib_negative(1).denominator(), h * hp);
  EXPECT_EQ(hfib_negative(2).numerator, HPoly(-1));
  EXPECT_EQ(hfib_negative(3).numerator, 1 + h * hp);
  for (unsigned n = 1; n <= 12; ++n) {
    EXPECT_EQ(hfib_negative(n).numerator, (n % 2 == 1 ? 1 : -1) * golden_fib(n)) << n;
  }
}

TEST(NegativeIndex, SuitePassesAndPinsPrefactor) {
  const auto r = verify_negative_index(15);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.pinned_conventions.size(), 1u);
}

TEST(FibSuites, IdentitiesPass) {
  const HFibCache fib;
  for (const auto& r : {verify_fib_recurrence(20, fib), verify_shifted_partial_sum(20, fib), verify_odd_index_sum(12, fib),
                        verify_even_index_sum(12, fib), verify_binomial_sum(10, kBinomialSumForm, fib),
                        verify_alternating_binomial_sum(12, kAlternatingSumForm, fib), verify_routes(20)}) {
    EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_GT(r.cases, 0) << r.suite;
  }
}

TEST(FibSuites, TrivialInstances) {
  const HFibCache fib;
  EXPECT_EQ(binomial_sum_lhs(1, kBinomialSumForm, fib), hfib_diagonal(2));
  EXPECT_EQ(alternating_binomial_sum_lhs(1, kAlternatingSumForm, fib), hfib_diagonal(1));
}

TEST(FibSuites, RejectedReadingsFail) {
  const HFibCache fib;
  EXPECT_FALSE(verify_binomial_sum(10, BinomialSumForm::literal, fib).passed());
  EXPECT_FALSE(verify_alternating_binomial_sum(12, BinomialSumForm::weighted, fib).passed());
}

TEST(FibTable, ReproducesPrintedColumns) {
  const FibTable t = fib_table(10);
  ASSERT_EQ(t.rows.size(), 11u);
  EXPECT_TRUE(t.report.passed());
  EXPECT_EQ(t.rows[0].value, HPoly());
  EXPECT_EQ(t.rows[0].classical, BigRational(0));
  EXPECT_EQ(t.rows[6].value, 1 + 4 * h * hp + 3 * h * h * hp * (hp + 1));
  EXPECT_EQ(t.rows[6].classical, BigRational(8));
  EXPECT_EQ(t.rows[9].classical, BigRational(34));
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(t.rows[n].value, golden_fib(n)) << n;
    EXPECT_EQ(t.rows[n].classical, BigRational(printed_classical_column()[n])) << n;
  }
}

TEST(FibTable, OnlyRowNineDiffersFromPrint) {
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(printed_fib_table_value(n) == hfib_diagonal(n), n != 9) << n;
  }
  const FibTable t = fib_table(10);
  ASSERT_EQ(t.report.pinned_conventions.size(), 1u);
  EXPECT_NE(t.report.pinned_conventions[0].ambiguity.find("n=9"), std::string::npos);
  EXPECT_EQ(hfib_diagonal(9).degree_in(Var::h), 4u);
  EXPECT_THROW(printed_fib_table_value(11), std::out_of_range);
}
