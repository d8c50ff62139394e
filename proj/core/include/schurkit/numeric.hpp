#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schurkit {

// All multiplicities, dimensions and coefficient values are exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(long long n, long long k);
Int int_pow(long long base, int exp);

// Integer division that must be exact; throws IntegrityError on a remainder.
Int exact_div(const Int& num, const Int& den);

}  // namespace schurkit
