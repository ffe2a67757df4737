#pragma once

// JSON forms of exact values. Rationals are always written "num/den".

#include "hankel_gamma/exact.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hankel_gamma {

using Json = nlohmann::ordered_json;

/// {"coeffs": ["num/den", ...]}, lowest power first; zero is an empty list.
inline Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
  return Json{{"coeffs", coeffs}};
}

inline Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("polynomial JSON needs a \"coeffs\" array");
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) {
    if (!v.is_string()) throw ParseError("coefficients must be \"p/q\" strings");
    c.push_back(parse_rational(v.get<std::string>()));
  }
  return Poly(std::move(c));
}

inline Json rational_to_json(const Rational& q) { return to_fraction_string(q); }

}  // namespace hankel_gamma
