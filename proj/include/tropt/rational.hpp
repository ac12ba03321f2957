#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "tropt/errors.hpp"

namespace tropt {

// Exact rational number type used by the default arithmetic backend.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "n" or "n/d" (optionally signed, surrounding whitespace allowed).
inline Rat parse_rational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty rational literal");
  const std::string body = text.substr(first, last - first + 1);

  const auto check_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("bad rational literal '" + text + "'");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad rational literal '" + text + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw ParseError("bad rational literal '" + text + "'");
      }
    }
  };

  const auto slash = body.find('/');
  try {
    if (slash == std::string::npos) {
      check_int(body);
      return Rat(BigInt(body));
    }
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rat(BigInt(num), d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

// Formats as "n" for integers and "n/d" otherwise (the parse_rational inverse).
inline std::string format_rational(const Rat& value) {
  return value.str();
}

inline bool is_integer(const Rat& value) {
  return denominator(value) == 1;
}

}  // namespace tropt
