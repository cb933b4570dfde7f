#include "angcalc/errors.hpp"

#include <charconv>

#include "angcalc/rational.hpp"

namespace angcalc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::ZeroHom: return "ZeroHom";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::NotAnAngle: return "NotAnAngle";
    case ErrorKind::BadDistance: return "BadDistance";
    case ErrorKind::NotWide: return "NotWide";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw DomainError(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw DomainError(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace angcalc
