#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace menage {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

// Catalan number (2k)! / (k! (k+1)!).
BigInt catalan_number(std::size_t k);

// Integer power with 0^0 = 1.
Rational ipow(const Rational& base, std::size_t exponent);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace menage
