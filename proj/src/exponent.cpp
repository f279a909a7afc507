#include "opnorm/exponent.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "opnorm/error.hpp"

namespace opnorm {
namespace {

double parse_number(std::string_view text, std::string_view token) {
  double out = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorKind::kInvalidExponent,
         "cannot parse exponent token '" + std::string(token) + "'");
  }
  return out;
}

}  // namespace

Exponent::Exponent(double value) : infinite_(false), value_(value) {
  if (!std::isfinite(value) || !(value >= 1.0)) {
    fail(ErrorKind::kInvalidExponent,
         "exponent must be a finite real >= 1 or inf, got " +
             std::to_string(value));
  }
}

Exponent Exponent::parse(std::string_view token) {
  if (token == "inf" || token == "INF" || token == "Inf") return infinity();
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    return Exponent(parse_number(token, token));
  }
  const double num = parse_number(token.substr(0, slash), token);
  const double den = parse_number(token.substr(slash + 1), token);
  if (den == 0.0) {
    fail(ErrorKind::kInvalidExponent,
         "zero denominator in exponent '" + std::string(token) + "'");
  }
  return Exponent(num / den);
}

double Exponent::value() const {
  if (infinite_) {
    fail(ErrorKind::kInvalidExponent, "value() called on infinite exponent");
  }
  return value_;
}

Exponent Exponent::conjugate() const noexcept {
  if (infinite_) return Exponent(1.0);
  const double gap = value_ - 1.0;
  if (gap < kConjugateInfThreshold) return infinity();
  return Exponent(value_ / gap);
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  // Shortest representation that round-trips.
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value_);
    if (std::strtod(buf, nullptr) == value_) break;
  }
  return buf;
}

}  // namespace opnorm
