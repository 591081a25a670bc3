#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>

#include "orbikit/error.hpp"

namespace orbikit {

/// Exact rational bidegree coordinate. Always kept in lowest terms with a
/// positive denominator (boost::rational normalizes on every operation).
using Grade = boost::rational<std::int64_t>;

/// A bidegree (p, q).
using Bidegree = std::pair<Grade, Grade>;

inline bool is_integral(const Grade& g) { return g.denominator() == 1; }

inline bool is_integral(const Bidegree& b) {
  return is_integral(b.first) && is_integral(b.second);
}

inline std::int64_t lcm_of(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// "3/2", "-1/3", or "2" for integral values.
inline std::string format_grade(const Grade& g) {
  if (is_integral(g)) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

/// Parses "a/b" or "a". Decimals are rejected.
inline Grade parse_grade(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Grade(detail::parse_int(text, text));
  auto num = detail::parse_int(text.substr(0, slash), text);
  auto den = detail::parse_int(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Grade(num, den);
}

}  // namespace orbikit
