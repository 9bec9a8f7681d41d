#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hfib/hpoly_json.hpp"
#include "hfib/operators.hpp"

namespace hfib::test_support {

inline nlohmann::json load_golden(const std::string& name) {
  const std::string path = std::string(HFIB_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  return nlohmann::json::parse(in);
}

inline const nlohmann::json& oracle() {
  static const nlohmann::json j = load_golden("oracle_values.json");
  return j;
}

inline const nlohmann::json& conventions() {
  static const nlohmann::json j = load_golden("conventions.json");
  return j;
}

/// {"power": "num/den", ...} as written by the oracle for elements of Q[D].
inline OpPoly oppoly_from_golden(const nlohmann::json& j) {
  OpPoly p;
  for (const auto& [power, coeff] : j.items()) p.add_term(unsigned(std::stoul(power)), parse_rational(coeff.get<std::string>()));
  return p;
}

}  // namespace hfib::test_support
