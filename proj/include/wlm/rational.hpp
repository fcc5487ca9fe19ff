#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wlm {

// Exact arithmetic everywhere: inclusion-exclusion coefficients overflow
// machine words quickly.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace wlm
