#pragma once

// Canonical JSON form of an HPoly: an array of
//   {"coeff": "num/den", "h": int, "hp": int, "q": int}
// in canonical term order, with zero exponents omitted.

#include <string>

#include "json.hpp"

#include "hfib/hpoly.hpp"

namespace hfib {

inline nlohmann::json to_json(const HPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json t;
    t["coeff"] = to_fraction_string(c);
    if (m.h != 0) t["h"] = m.h;
    if (m.hp != 0) t["hp"] = m.hp;
    if (m.q != 0) t["q"] = m.q;
    terms.push_back(std::move(t));
  }
  return terms;
}

inline HPoly hpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("HPoly JSON must be an array of terms");
  HPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw std::invalid_argument("HPoly term needs a string \"coeff\"");
    }
    auto exponent = [&](const char* key) -> unsigned {
      if (!t.contains(key)) return 0;
      const auto& v = t[key];
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument(std::string("exponent \"") + key + "\" must be a non-negative integer");
      }
      return v.get<unsigned>();
    };
    for (const auto& [key, value] : t.items()) {
      if (key != "coeff" && key != "h" && key != "hp" && key != "q") {
        throw std::invalid_argument("unknown HPoly term key: " + key);
      }
    }
    p.add_term(Monomial{exponent("h"), exponent("hp"), exponent("q")},
               parse_rational(t["coeff"].get<std::string>()));
  }
  return p;
}

}  // namespace hfib
