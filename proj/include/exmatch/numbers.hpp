#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace exmatch {

using Bint = boost::multiprecision::cpp_int;
using Brat = boost::multiprecision::cpp_rational;

// C(a, b); zero whenever b < 0 or b > a or a < 0. Multiplicative form, each
// intermediate division is exact.
Bint binomial(long long a, long long b);

}  // namespace exmatch
