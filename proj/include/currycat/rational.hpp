#pragma once

// Exact rational scalars. All arithmetic in this library is over Q; nothing
// is ever rounded. Backed by boost::multiprecision (arbitrary precision,
// always reduced, positive denominator).

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace currycat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

// Accepts "p", "-p", "p/q"; rejects anything else (including q == 0).
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> std::optional<Integer> {
    if (t.empty()) return std::nullopt;
    std::size_t i = 0;
    if (t[0] == '-' || t[0] == '+') i = 1;
    if (i == t.size()) return std::nullopt;
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') return std::nullopt;
    return Integer(std::string(t));
  };
  if (slash == std::string_view::npos) {
    auto p = parse_int(s);
    if (!p) return std::nullopt;
    return Rational(*p);
  }
  auto p = parse_int(s.substr(0, slash));
  auto q = parse_int(s.substr(slash + 1));
  if (!p || !q || *q == 0) return std::nullopt;
  return Rational(*p, *q);
}

}  // namespace currycat
