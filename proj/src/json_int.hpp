#pragma once

#include <string>

#include "bftorus/errors.hpp"
#include "bftorus/polyring.hpp"
#include "json.hpp"

namespace bftorus::detail {

// Integers travel as JSON numbers when they fit in a long, as decimal strings otherwise.
inline Integer json_to_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "bad integer string '" + j.get<std::string>() + "'");
    }
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

inline std::string integer_to_json(const Integer& v) {
  return v.fits_slong_p() ? v.get_str() : '"' + v.get_str() + '"';
}

}  // namespace bftorus::detail
