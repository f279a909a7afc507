#pragma once

#include <string>
#include <string_view>

namespace opnorm {

/// A norm exponent p in [1, inf]. Infinity is a distinct state, never a
/// sentinel float, so conjugate arithmetic cannot produce NaN.
class Exponent {
 public:
  /// Throws ErrorKind::kInvalidExponent for p < 1, NaN, or +inf as a double.
  explicit Exponent(double value);

  static Exponent infinity() noexcept { return Exponent(); }

  /// Accepts "inf", decimals ("2.5") and rationals ("4/3"). Rationals are
  /// parsed as integers and divided once.
  static Exponent parse(std::string_view token);

  bool is_inf() const noexcept { return infinite_; }

  /// Finite value; calling this on infinity throws.
  double value() const;

  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Hoelder conjugate p/(p-1). 1 <-> inf. p - 1 < 1e-14 maps to inf.
  Exponent conjugate() const noexcept;

  /// "inf" or shortest round-trip decimal.
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  /// Total order with inf greatest.
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) noexcept {
    return a < b || a == b;
  }
  friend bool operator>(const Exponent& a, const Exponent& b) noexcept {
    return b < a;
  }
  friend bool operator>=(const Exponent& a, const Exponent& b) noexcept {
    return b <= a;
  }

  bool at_least(double x) const noexcept { return infinite_ || value_ >= x; }

 private:
  Exponent() noexcept : infinite_(true), value_(0.0) {}

  bool infinite_;
  double value_;
};

inline constexpr double kConjugateInfThreshold = 1e-14;

inline Exponent holder_conjugate(const Exponent& p) noexcept { return p.conjugate(); }

/// The (q, r) pair of an induced norm q -> r.
struct NormQuery {
  Exponent q;
  Exponent r;

  /// p = q*, the exponent dual to the domain.
  Exponent q_star() const noexcept { return q.conjugate(); }
  Exponent r_star() const noexcept { return r.conjugate(); }

  std::string to_string() const { return q.to_string() + "->" + r.to_string(); }
};

}  // namespace opnorm
