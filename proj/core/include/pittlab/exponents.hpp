#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace pittlab {

/// A Lebesgue exponent in [1, inf]. Infinity is a distinguished value, not a
/// large float; conjugation maps 1 <-> inf exactly.
class Exponent {
public:
  Exponent() : v_(2.0) {}
  explicit Exponent(double v);

  static Exponent infinity() {
    Exponent e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }

  /// Accepts decimals ("1.5"), rationals ("4/3") and "inf".
  static Exponent parse(std::string_view s);

  bool is_inf() const { return v_ == std::numeric_limits<double>::infinity(); }
  double value() const { return v_; }

  /// 1/p, zero when p = inf.
  double inverse() const { return is_inf() ? 0.0 : 1.0 / v_; }

  /// Conjugate exponent p' with 1/p + 1/p' = 1.
  Exponent conjugate() const;

  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.v_ == b.v_; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return a.v_ <= b.v_; }

private:
  double v_;
};

}  // namespace pittlab
