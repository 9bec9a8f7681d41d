#include <gtest/gtest.h>

#include "hfib/operator_identities.hpp"
#include "hfib/sampling.hpp"
#include "support/golden.hpp"

using namespace hfib;

namespace {

const HPoly h = HPoly::h();
const HPoly hp = HPoly::hp();
const OpPoly D = OpPoly::D();
const OpPoly one(1);

}  // namespace

TEST(FibOp, Examples) {
  EXPECT_EQ(fib_op(0), OpPoly());
  EXPECT_EQ(fib_op(3), one + D);
  EXPECT_EQ(fib_op(5), one + OpPoly(3) * D + OpPoly::D(2));
  EXPECT_EQ(to_string(fib_op(5)), "1 + 3*D + D^2");
  EXPECT_EQ(to_string(OpPoly()), "0");
}

TEST(FibOp, ClosedFormMatchesRecurrence) {
  const auto seq = fib_op_sequence(40);
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(seq[n], fib_op(n)) << n;
}

TEST(FibOp, CubeMatchesOracle) {
  EXPECT_EQ(pow(fib_op(5), 3), test_support::oppoly_from_golden(test_support::oracle().at("fib_op_cubed_5")));
}

TEST(OpEval, Examples) {
  EXPECT_EQ(op_eval(D), h * hp);
  EXPECT_EQ(op_eval(OpPoly::D(2)), h * h * hp * hp + h * h * hp);
  EXPECT_EQ(op_eval(fib_op(5)), hfib_diagonal(5));
  EXPECT_EQ(op_eval(OpPoly()), HPoly());
}

TEST(QhMatrix, Powers) {
  EXPECT_EQ(qh_power(0), OpMatrix2::identity());
  EXPECT_EQ(qh_power(1), (OpMatrix2{one, one, D, OpPoly()}));
  EXPECT_EQ(qh_power(2), (OpMatrix2{one + D, one, D, D}));
  for (unsigned n = 1; n <= 15; ++n) {
    const OpMatrix2 m = qh_power(n);
    EXPECT_EQ(m, (OpMatrix2{fib_op(n + 1), fib_op(n), D * fib_op(n), D * fib_op(n - 1)})) << n;
  }
}

TEST(QhMatrix, EvaluatedEntryUsesShiftedSuperscript) {
  const HPoly entry = op_eval(qh_power(3).a21);
  EXPECT_EQ(entry, h * hp * shift_hprime(hfib_diagonal(3), 1));
  EXPECT_EQ(entry, h * hp * (1 + h * hp + h));
}

TEST(QhMatrix, AdjugateAndDeterminant) {
  Sampler s;
  for (int i = 0; i < 50; ++i) {
    const OpMatrix2 m{s.oppoly(), s.oppoly(), s.oppoly(), s.oppoly()};
    EXPECT_EQ(m * m.adjugate(), m.det() * OpMatrix2::identity());
  }
  EXPECT_EQ(qh_matrix().det(), -D);
}

TEST(NegFibOp, Examples) {
  EXPECT_EQ(neg_fib_op(1).g, one);
  EXPECT_EQ(neg_fib_op(2).g, -one);
  EXPECT_EQ(neg_fib_op(3).g, one + D);
  for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(neg_fib_op(n).g, OpPoly(sign_pow(n - 1)) * fib_op(n)) << n;
  EXPECT_THROW(neg_fib_op(0), std::invalid_argument);
}

TEST(Binet, Examples) {
  const SqrtExt lp = SqrtExt::lambda_plus(), lm = SqrtExt::lambda_minus();
  EXPECT_EQ(lp + lm, (SqrtExt{one, OpPoly()}));
  EXPECT_EQ(lp - lm, SqrtExt::s());
  EXPECT_EQ(SqrtExt::s() * SqrtExt::s(), (SqrtExt{SqrtExt::radicand(), OpPoly()}));
  EXPECT_EQ(binet_fib(2), one);
  EXPECT_EQ(binet_fib(3), one + D);
  for (unsigned n = 0; n <= 25; ++n) EXPECT_EQ(binet_fib(n), fib_op(n)) << n;
}

TEST(OperatorSuites, AllPass) {
  for (const auto& r : {verify_qh_power(10), cassini_check(20), addition_check(12, 12), cayley_hamilton_check(15),
                        index_multiple_check(6, 6), index_multiple_alternating_check(6, 6), catalan_check(15),
                        docagne_check(12, 12), operator_binomial_sum_check(15),
                        operator_alternating_sum_check(20), neg_index_op_check(20), binet_check(25),
                        symmetric_function_check()}) {
    EXPECT_TRUE(r.passed()) << r.suite << (r.failures.empty() ? "" : ": " + r.failures[0].params);
    EXPECT_GT(r.cases, 0) << r.suite;
  }
}

TEST(OperatorSuites, DocagneBothBranches) {
  const auto r = docagne_check(4, 4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases, 5 * 4);
  EXPECT_FALSE(r.pinned_conventions.empty());
  // m < n: the right side needs F at a negative index, D-cleared.
  const OpPoly lhs = fib_op(2) * fib_op(6) - fib_op(3) * fib_op(5);
  EXPECT_EQ(lhs, OpPoly(sign_pow(5)) * OpPoly::D(2) * neg_fib_op(3).g);
  // m >= n
  EXPECT_EQ(fib_op(7) * fib_op(4) - fib_op(8) * fib_op(3), OpPoly(sign_pow(3)) * OpPoly::D(3) * fib_op(4));
}

// Randomized properties over Q[D].

TEST(OpPolyProperty, CommutativeRing) {
  Sampler s;
  for (int i = 0; i < 200; ++i) {
    const OpPoly a = s.oppoly(), b = s.oppoly(), c = s.oppoly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, OpPoly());
  }
}

TEST(OpPolyProperty, CompositionRule) {
  Sampler s;
  for (int i = 0; i < 200; ++i) {
    const OpPoly x = s.oppoly();
    EXPECT_EQ(op_eval(D * x), h * hp * shift_hprime(op_eval(x), 1));
    const unsigned j = unsigned(s.integer(0, 4));
    EXPECT_EQ(op_eval(OpPoly::D(j) * x), op_eval_after_powers(op_eval(x), j));
  }
  EXPECT_TRUE(verify_composition_rule(oppoly_samples(kDefaultSeed, 16)).passed());
}

TEST(OpPolyProperty, EvalIsAdditive) {
  Sampler s;
  for (int i = 0; i < 200; ++i) {
    const OpPoly a = s.oppoly(), b = s.oppoly();
    EXPECT_EQ(op_eval(a + b), op_eval(a) + op_eval(b));
  }
}
