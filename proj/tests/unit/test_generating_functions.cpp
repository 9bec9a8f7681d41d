#include <gtest/gtest.h>

#include "hfib/generating_functions.hpp"
#include "support/golden.hpp"

using namespace hfib;

namespace {

const OpPoly D = OpPoly::D();
const OpPoly one(1);

void expect_matches_golden(const OpSeries& s, const char* key) {
  const auto& golden = test_support::oracle().at(key);
  for (std::size_t k = 0; k < golden.size(); ++k) {
    EXPECT_EQ(s[k], test_support::oppoly_from_golden(golden[k])) << key << " k=" << k;
  }
}

}  // namespace

TEST(SeriesExpand, Examples) {
  const OpSeries geo = series_expand({{one}, {one, -one}}, 4);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(geo[k], one);
  const OpSeries fib = series_expand(gf_fib(), 6);
  const std::vector<OpPoly> expected{OpPoly(), one, one, one + D, one + OpPoly(2) * D,
                                     one + OpPoly(3) * D + OpPoly::D(2)};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(fib[k], expected[k]) << k;
  const OpSeries zero = series_expand({{}, gf::fib_denominator()}, 5);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(zero[k], OpPoly());
}

TEST(SeriesExpand, RejectsNonUnitConstantTerm) {
  EXPECT_THROW(series_expand({{one}, {OpPoly(2), -one}}, 4), std::domain_error);
  EXPECT_THROW(series_expand({{one}, {D}}, 4), std::domain_error);
  EXPECT_THROW(series_expand({{one}, {}}, 4), std::domain_error);
}

TEST(GeneratingFunctions, Examples) {
  const OpSeries fib = series_expand(gf_fib(), 16);
  EXPECT_EQ(fib[0], OpPoly());
  EXPECT_EQ(fib[5], one + OpPoly(3) * D + OpPoly::D(2));
  EXPECT_EQ(fib[12], fib_op(12));
  EXPECT_EQ(series_expand(gf_even(), 4)[0], OpPoly());
  EXPECT_EQ(series_expand(gf_even(), 4)[3], one + OpPoly(4) * D + OpPoly(3) * OpPoly::D(2));
  EXPECT_EQ(series_expand(gf_odd(), 4)[0], one);
  EXPECT_EQ(series_expand(gf_shifted(2), 4)[0], one);
  EXPECT_EQ(gf_shifted(2).numerator, (XPoly{one, D}));
  EXPECT_EQ(series_expand(gf_shifted(3), 4)[2], fib_op(5));
  EXPECT_EQ(series_expand(gf_square(), 4)[0], OpPoly());
  EXPECT_EQ(series_expand(gf_product_shift(), 4)[0], one);
  EXPECT_EQ(series_expand(gf_cube(), 8)[5], pow(one + OpPoly(3) * D + OpPoly::D(2), 3));
  EXPECT_THROW(gf_shifted(0), std::invalid_argument);
}

TEST(GeneratingFunctions, MatchOracleExpansions) {
  expect_matches_golden(series_expand(gf_fib(), 16), "gf_fib_coefficients");
  expect_matches_golden(series_expand(gf_cube(), 16), "gf_cube_coefficients");
}

TEST(GeneratingFunctions, EveryCaseMatchesAndRemultiplies) {
  for (const auto& c : gf_cases(6)) {
    const OpSeries s = series_expand(c.f, 16);
    for (unsigned k = 0; k < 16; ++k) EXPECT_EQ(s[k], c.expected(k)) << c.name << " k=" << k;
    EXPECT_EQ(s * OpSeries(16, c.f.denominator), OpSeries(16, c.f.numerator)) << c.name;
  }
}

TEST(GeneratingFunctions, ByName) {
  EXPECT_TRUE(gf_by_name("cube").has_value());
  EXPECT_TRUE(gf_by_name("shift:7").has_value());
  EXPECT_FALSE(gf_by_name("shift:0").has_value());
  EXPECT_FALSE(gf_by_name("shift:x").has_value());
  EXPECT_FALSE(gf_by_name("shift:").has_value());
  EXPECT_FALSE(gf_by_name("quartic").has_value());
}

TEST(GeneratingFunctions, SuitePasses) {
  const auto r = verify_generating_functions(16);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.pinned_conventions.empty());
}

TEST(WeightedSeries, ZeroHCollapse) {
  const auto r = weighted_series_check(BigRational(2), BigRational(0), make_rational(7, 3), 60,
                                       make_rational(1, 1000000000000));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.geometric_side, make_rational(1, 2));
  EXPECT_LT(abs(r.fib_side - make_rational(1, 2)), make_rational(1, 1000000000000));
}

TEST(WeightedSeries, ConvergentConfigurationMatchesOracle) {
  const auto r = weighted_series_check(BigRational(2), make_rational(1, 100), make_rational(1, 2), 80,
                                       make_rational(1, 1000000000000));
  const auto& golden = test_support::oracle().at("weighted_2_1e-2_half_80");
  EXPECT_EQ(r.fib_side, parse_rational(golden.at("fib_side").get<std::string>()));
  EXPECT_EQ(r.geometric_side, parse_rational(golden.at("geometric_side").get<std::string>()));
  EXPECT_TRUE(r.agree);
}

TEST(WeightedSeries, DivergentConfigurationIsRejected) {
  // At h = 1/10 the geometric side's terms j!/20^j grow without bound.
  EXPECT_THROW(weighted_series_check(BigRational(2), make_rational(1, 10), make_rational(1, 2), 80,
                                     make_rational(1, 1000000000000)),
               NonConvergentError);
}

TEST(WeightedSeries, InvalidBase) {
  const BigRational tol = make_rational(1, 1000);
  EXPECT_THROW(weighted_series_check(BigRational(0), 0, 0, 5, tol), std::invalid_argument);
  EXPECT_THROW(weighted_series_check(BigRational(1), 0, 0, 5, tol), std::invalid_argument);
}

TEST(WeightedSeries, ClassicalBullets) { EXPECT_TRUE(verify_classical_weight_bullets().passed()); }
