#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace grovekit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a request exceeds a built-in cost guard (maps to CLI exit 2).
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal cross-check fails (maps to CLI exit 1).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Always-on invariant check; never compiled out, unlike assert().
#define GK_CHECK(cond, msg)                                                 \
  do {                                                                      \
    if (!(cond))                                                            \
      throw ::grovekit::internal_error(std::string("invariant failed at ")  \
                                       + __FILE__ + ":"                     \
                                       + std::to_string(__LINE__) + ": "    \
                                       + (msg));                            \
  } while (0)

// Precondition check for caller-supplied arguments.
#define GK_ARG_CHECK(cond, msg)                                  \
  do {                                                           \
    if (!(cond)) throw std::invalid_argument(msg);               \
  } while (0)

// Cost guards keep accidental huge computations from running away.
// Set GROVE_COST_GUARD=off in the environment to lift all of them.
inline bool cost_guard_enabled() {
  const char* v = std::getenv("GROVE_COST_GUARD");
  return !(v && std::string(v) == "off");
}

inline void enforce_cost_guard(bool within_limit, const std::string& what) {
  if (cost_guard_enabled() && !within_limit)
    throw guard_error("cost guard: " + what +
                      " (set GROVE_COST_GUARD=off to override)");
}

// Parses a (possibly signed) decimal integer literal.  Leading zeros are
// stripped explicitly; BigInt's own parser would treat them as octal.
inline BigInt parse_integer(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  GK_ARG_CHECK(!s.empty() &&
                   s.find_first_not_of("0123456789") == std::string::npos,
               "malformed integer literal");
  size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  BigInt v{s.substr(first)};
  return neg ? -v : v;
}

// Parses "p/q", "p" or a plain decimal ("0.25") into an exact rational.
inline Rat parse_rational(const std::string& s) {
  GK_ARG_CHECK(!s.empty(), "empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_integer(s.substr(0, slash));
    const BigInt den = parse_integer(s.substr(slash + 1));
    GK_ARG_CHECK(den != 0, "zero denominator: " + s);
    return Rat(num, den);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(parse_integer(s));
  const BigInt num = parse_integer(s.substr(0, dot) + s.substr(dot + 1));
  BigInt den = 1;
  for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rat(num, den);
}

// Creation probabilities for the three two-edge outcomes at an empty
// downward triangle: alpha picks the pair {right, left} (the two slots
// through the triangle's side vertices), beta picks {horizontal, left},
// gamma picks {horizontal, right}.  Must be nonnegative and sum to 1.
struct Bias {
  Rat alpha, beta, gamma;

  static Bias uniform() { return {Rat(1, 3), Rat(1, 3), Rat(1, 3)}; }
  bool is_uniform() const {
    return alpha == Rat(1, 3) && beta == Rat(1, 3) && gamma == Rat(1, 3);
  }
  bool valid() const {
    return alpha >= 0 && beta >= 0 && gamma >= 0 &&
           alpha + beta + gamma == 1;
  }
  void require_valid() const {
    GK_ARG_CHECK(valid(), "bias must be nonnegative and sum to exactly 1");
  }
};

}  // namespace grovekit
