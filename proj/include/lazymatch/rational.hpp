#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lazymatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

inline double rational_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q", or just "p" for integers.
std::string rational_str(const Rational& r);

}  // namespace lazymatch
