#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace angcalc {

using Rational = boost::rational<std::int64_t>;

// Comparing boost::rational against an int literal recurses forever under
// C++20 rewritten operators; test the numerator instead.
inline bool is_zero(const Rational& q) noexcept { return q.numerator() == 0; }

/// Always "num/den", den > 0, e.g. "1/1", "-3/2", "0/1".
std::string to_string(const Rational& q);

/// Accepts "n", "n/d" with optional sign; throws DomainError(ParseError).
Rational parse_rational(std::string_view text);

}  // namespace angcalc
