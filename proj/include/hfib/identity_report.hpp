#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hfib {

inline constexpr const char* kReportSchema = "hfib-report/1";

struct IdentityFailure {
  std::string params;
  std::string lhs;
  std::string rhs;
};

/// A reading chosen where the printed statement is ambiguous or carries a typo.
struct PinnedConvention {
  std::string ambiguity;
  std::string resolution;
};

/// Per-instance outcome recorded by experimental suites, which document
/// rather than assert.
struct Observation {
  std::string identity;
  std::string params;
  bool holds = false;
};

struct IdentityReport {
  IdentityReport() = default;
  explicit IdentityReport(std::string suite_name, bool is_experimental = false)
      : suite(std::move(suite_name)), experimental(is_experimental) {}

  std::string suite;
  long cases = 0;
  std::vector<IdentityFailure> failures;
  std::vector<PinnedConvention> pinned_conventions;
  std::vector<Observation> observations;
  bool experimental = false;

  bool passed() const { return failures.empty(); }

  /// Counts one case; records a failure when lhs != rhs.
  template <class T, class Render>
  bool check(const std::string& params, const T& lhs, const T& rhs, Render&& render) {
    ++cases;
    if (lhs == rhs) return true;
    failures.push_back({params, render(lhs), render(rhs)});
    return false;
  }

  void pin(std::string ambiguity, std::string resolution) {
    pinned_conventions.push_back({std::move(ambiguity), std::move(resolution)});
  }

  void merge(const IdentityReport& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    pinned_conventions.insert(pinned_conventions.end(), other.pinned_conventions.begin(),
                              other.pinned_conventions.end());
    observations.insert(observations.end(), other.observations.begin(), other.observations.end());
  }
};

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["passed"] = r.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["pinned_conventions"] = nlohmann::json::array();
  for (const auto& p : r.pinned_conventions) {
    j["pinned_conventions"].push_back({{"ambiguity", p.ambiguity}, {"resolution", p.resolution}});
  }
  if (r.experimental) {
    j["experimental"] = true;
    j["observations"] = nlohmann::json::array();
    for (const auto& o : r.observations) {
      j["observations"].push_back({{"identity", o.identity}, {"params", o.params}, {"holds", o.holds}});
    }
  }
  return j;
}

}  // namespace hfib
