#include "pittlab/exponents.hpp"

#include <charconv>
#include <cmath>

#include "pittlab/errors.hpp"

namespace pittlab {

Exponent::Exponent(double v) : v_(v) {
  if (!(v >= 1.0)) {  // also rejects NaN
    throw InvalidConfig("exponent must lie in [1, inf], got " + std::to_string(v));
  }
}

Exponent Exponent::parse(std::string_view s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return Exponent::infinity();
  auto parse_num = [](std::string_view t) -> double {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw InvalidConfig("cannot parse exponent '" + std::string(t) + "'");
    }
    return out;
  };
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    const double num = parse_num(s.substr(0, slash));
    const double den = parse_num(s.substr(slash + 1));
    if (den == 0.0) throw InvalidConfig("zero denominator in exponent");
    return Exponent(num / den);
  }
  return Exponent(parse_num(s));
}

Exponent Exponent::conjugate() const {
  if (is_inf()) return Exponent(1.0);
  if (v_ == 1.0) return Exponent::infinity();
  return Exponent(v_ / (v_ - 1.0));
}

std::string Exponent::str() const {
  if (is_inf()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v_);
  return buf;
}

}  // namespace pittlab
