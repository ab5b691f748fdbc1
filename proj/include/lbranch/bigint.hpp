#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "lbranch/errors.hpp"

namespace lbranch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_decimal(std::string_view s)
{
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == start)
    throw ParseError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("malformed integer literal '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

} // namespace lbranch
