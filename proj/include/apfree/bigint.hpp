#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace apfree {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive BigInt, accurate to ~1 ulp of double.
double log2_big(const BigInt& n);

inline std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace apfree
