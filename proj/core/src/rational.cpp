#include "groupoidlab/rational.hpp"

#include "groupoidlab/common.hpp"

namespace gl {

namespace {

bool looks_like_integer(std::string const& s) {
  if (s.empty()) {
    return false;
  }
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string const& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!looks_like_integer(num) || !looks_like_integer(den)) {
    fail("ParseError", "not a rational: '" + text + "'");
  }
  mpz_class n(num), d(den);
  if (sgn(d) == 0) {
    fail("ParseError", "zero denominator in '" + text + "'");
  }
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(Rational const& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) {
    return v.get_num().get_str();
  }
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace gl
