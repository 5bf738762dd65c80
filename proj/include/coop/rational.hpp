#ifndef COOP_RATIONAL_HPP
#define COOP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "coop/errors.hpp"

namespace coop {

/// Arbitrary-precision integer used for table scaling and factorial weights.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. All characteristic values, Shapley values and
/// impacts are kept in this form; nothing on the exact paths is ever rounded.
using Rational = boost::multiprecision::cpp_rational;

/// Builds a normalized rational from a numerator/denominator pair.
/// Accepts negative denominators and moves the sign to the numerator.
Rational make_rational(BigInt num, BigInt den);

/// Parses "p/q", "p" or "-p/q" (canonical or not) into a normalized rational.
/// Throws Error on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical serialization: "p/q" when the denominator is not 1, plain
/// integer text otherwise. parse_rational(to_fraction_string(r)) == r.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

} // namespace coop

#endif // COOP_RATIONAL_HPP
