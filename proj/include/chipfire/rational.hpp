#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chipfire {

// All arithmetic in the library is exact. Divisor values are arbitrary
// precision integers, potentials are arbitrary precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical text form: lowest terms, sign on the numerator, "3" when the
/// denominator is 1 and "5/2" otherwise.
std::string rat_to_string(const Rat& q);

/// Parses "3", "-7" or "5/2", "-5/2". Throws Error(bad_input) on anything else.
Rat rat_from_string(const std::string& text);

std::string int_to_string(const Int& n);

/// Parses an optionally signed decimal integer.
Int int_from_string(const std::string& text);

}  // namespace chipfire
