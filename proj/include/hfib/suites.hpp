#pragma once

// Grouped identity suites, one group per module, each sized by a single
// bound. Groups are independent and may run concurrently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "hfib/generating_functions.hpp"
#include "hfib/h_fibonacci.hpp"
#include "hfib/h_pascal.hpp"
#include "hfib/identity_report.hpp"
#include "hfib/operator_identities.hpp"
#include "hfib/qh_analogue.hpp"
#include "hfib/sampling.hpp"

namespace hfib {

inline constexpr unsigned kCharlierSamples = 12;
inline constexpr unsigned kDefaultGfOrder = 16;

/// A group report: the merged totals plus every component report.
struct SuiteGroup {
  IdentityReport total;
  std::vector<IdentityReport> parts;

  void add(IdentityReport r) {
    total.merge(r);
    parts.push_back(std::move(r));
  }
  bool passed() const { return total.passed(); }
};

inline nlohmann::json to_json(const SuiteGroup& g) {
  nlohmann::json j = to_json(g.total);
  j["suites"] = nlohmann::json::array();
  for (const auto& p : g.parts) j["suites"].push_back(to_json(p));
  return j;
}

inline SuiteGroup pascal_suites(unsigned n_max, std::uint64_t seed = kDefaultSeed) {
  SuiteGroup g;
  g.total.suite = "pascal";
  g.add(verify_pascal_recurrences(n_max));
  g.add(verify_column_sum(n_max));
  g.add(verify_charlier_rowsum(std::min(n_max, 10u), charlier_samples(seed, kCharlierSamples)));
  return g;
}

inline SuiteGroup fib_suites(unsigned n_max) {
  SuiteGroup g;
  g.total.suite = "fib";
  const HFibCache fib;
  g.add(verify_fib_recurrence(n_max, fib));
  g.add(verify_shifted_partial_sum(n_max, fib));
  g.add(verify_odd_index_sum(n_max, fib));
  g.add(verify_even_index_sum(n_max, fib));
  g.add(verify_binomial_sum(n_max, kBinomialSumForm, fib));
  g.add(verify_alternating_binomial_sum(n_max, kAlternatingSumForm, fib));
  g.add(verify_routes(n_max));
  g.add(verify_classical_limit(n_max));
  g.add(verify_negative_index(n_max));
  g.add(fib_table(std::min(n_max, 10u)).report);
  return g;
}

inline SuiteGroup operator_suites(unsigned n_max, std::uint64_t seed = kDefaultSeed) {
  SuiteGroup g;
  g.total.suite = "operators";
  g.add(verify_qh_power(std::min(n_max, 10u)));
  g.add(verify_composition_rule(oppoly_samples(seed, 16)));
  g.add(cassini_check(n_max));
  g.add(addition_check(n_max, n_max));
  g.add(cayley_hamilton_check(n_max));
  g.add(index_multiple_check(std::min(n_max, 6u), std::min(n_max, 6u)));
  g.add(index_multiple_alternating_check(std::min(n_max, 6u), std::min(n_max, 6u)));
  g.add(catalan_check(n_max));
  g.add(docagne_check(n_max, n_max));
  g.add(operator_binomial_sum_check(n_max));
  g.add(operator_alternating_sum_check(n_max));
  g.add(neg_index_op_check(n_max));
  g.add(binet_check(n_max));
  g.add(symmetric_function_check());
  return g;
}

/// Weighted series at a configuration where both truncations converge.
inline IdentityReport weighted_series_report(const BigRational& p, const BigRational& h, const BigRational& hp,
                                             unsigned order, const BigRational& tol) {
  IdentityReport report("weighted-series");
  const std::string params = "p=" + to_display_string(p) + ",h=" + to_display_string(h) +
                             ",hp=" + to_display_string(hp) + ",order=" + std::to_string(order) +
                             ",tol=" + to_display_string(tol);
  ++report.cases;
  try {
    const auto r = weighted_series_check(p, h, hp, order, tol);
    if (!r.agree) {
      report.failures.push_back({params, std::to_string(to_double(r.fib_side)),
                                 std::to_string(to_double(r.geometric_side))});
    }
  } catch (const NonConvergentError& e) {
    report.failures.push_back({params, e.what(), "last terms below tol"});
  }
  return report;
}

inline SuiteGroup gf_suites(unsigned order) {
  SuiteGroup g;
  g.total.suite = "gf";
  g.add(verify_generating_functions(order));
  g.add(verify_classical_weight_bullets());
  g.add(weighted_series_report(BigRational(2), make_rational(1, 100), make_rational(1, 2), 80,
                               make_rational(1, 1000000000000)));
  return g;
}

inline SuiteGroup qh_suites(unsigned n_max, bool experimental = false, bool strict = false) {
  SuiteGroup g;
  g.total.suite = "qh";
  g.add(verify_qh_recurrences(n_max));
  g.add(verify_qh_specializations(n_max));
  if (experimental) {
    g.total.experimental = true;
    g.add(qfib_experimental_checks(n_max, strict));
  }
  return g;
}

/// Every non-experimental group, run concurrently and joined in a fixed order.
inline SuiteGroup all_suites(unsigned n_max, std::uint64_t seed = kDefaultSeed) {
  std::vector<std::future<SuiteGroup>> jobs;
  jobs.push_back(std::async(std::launch::async, [=] { return pascal_suites(n_max, seed); }));
  jobs.push_back(std::async(std::launch::async, [=] { return fib_suites(n_max); }));
  jobs.push_back(std::async(std::launch::async, [=] { return operator_suites(n_max, seed); }));
  jobs.push_back(std::async(std::launch::async, [] { return gf_suites(kDefaultGfOrder); }));
  jobs.push_back(std::async(std::launch::async, [=] { return qh_suites(n_max); }));
  SuiteGroup all;
  all.total.suite = "all";
  for (auto& j : jobs) {
    SuiteGroup g = j.get();
    for (auto& p : g.parts) all.add(std::move(p));
  }
  return all;
}

}  // namespace hfib
