#ifndef GROUPOIDLAB_RATIONAL_HPP_
#define GROUPOIDLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace gl {

// Exact rational arithmetic carries every measure weight; nothing in the
// measure layer is allowed to round.
using Rational = mpq_class;

// Parses "p/q" or "p" (arbitrary precision). Throws Error("ParseError", ...)
// on malformed input or zero denominator.
Rational parse_rational(std::string const& text);

// Canonical "p/q" (or "p" when the denominator is 1); round-trips bit-exactly
// through parse_rational.
std::string format_rational(Rational const& value);

inline double to_double(Rational const& value) {
  return value.get_d();
}

}  // namespace gl
#endif  // GROUPOIDLAB_RATIONAL_HPP_
