#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace splitfox {

// All integer and rational arithmetic in the library is exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace splitfox
