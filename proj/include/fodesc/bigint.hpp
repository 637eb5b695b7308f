#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fodesc {

using BigInt = boost::multiprecision::cpp_int;

// Base-2 logarithm of a positive integer. Uses the top 53 significant bits,
// so the relative error is at the level of double rounding even for values
// far beyond the range of double.
double log2(const BigInt& value);

}  // namespace fodesc
