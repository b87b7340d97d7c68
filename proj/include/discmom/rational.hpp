#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "discmom/errors.hpp"

namespace discmom {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer not exceeding q.
inline Integer floor_integer(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

inline Rational floor(const Rational& q) { return Rational(floor_integer(q)); }

inline Rational pow(const Rational& base, std::size_t exponent) {
  Rational result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// Lowest-terms text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p", "-p", "p/q" (q > 0). Surrounding whitespace is ignored.
/// `offset` is added to reported error positions so callers parsing lists
/// can point into the original input.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError("empty rational", offset + begin);

  auto scan_integer = [&](std::size_t pos, bool allow_sign) {
    std::size_t i = pos;
    if (allow_sign && i < end && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t digits = i;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected digits", offset + i);
    return i;
  };

  std::size_t pos = scan_integer(begin, true);
  std::string num(text.substr(begin, pos - begin));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  std::string den = "1";
  if (pos < end && text[pos] == '/') {
    const std::size_t den_begin = pos + 1;
    pos = scan_integer(den_begin, false);
    den = std::string(text.substr(den_begin, pos - den_begin));
    if (Integer(den) == 0) throw ParseError("zero denominator", offset + den_begin);
  }
  if (pos != end) {
    if (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E') {
      throw ParseError("decimal input is not exact; write it as a fraction p/q", offset + pos);
    }
    throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", offset + pos);
  }
  return Rational(Integer(num), Integer(den));
}

/// Comma-separated rationals, e.g. "3/2,5/2".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(parse_rational(text.substr(start, stop - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace discmom
