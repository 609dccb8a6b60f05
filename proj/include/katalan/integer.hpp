#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace katalan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& x) { return x.str(); }

// Accepts an optional leading '-' followed by digits.
Integer parse_integer(const std::string& s);

// Generalized binomial binom(n, i) for any integer n and i >= 0; zero for i < 0.
Integer binom(std::int64_t n, std::int64_t i);

}  // namespace katalan
