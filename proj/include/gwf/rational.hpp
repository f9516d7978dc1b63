#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gwf {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms with q > 0; integers without "/1".
std::string to_string(const Rational& r);

/// Accepts "3", "-2", "1/2", "-3/4".
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Representative of r modulo the integers, in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace gwf
