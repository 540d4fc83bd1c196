#pragma once

// Exact arithmetic substrate: arbitrary-precision integers/rationals and the
// rising-factorial (Pochhammer) symbol with its three-case definition.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilt {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (x)_n = x(x+1)...(x+n-1) for n > 0; 1 for n = 0;
// 1/((x-1)(x-2)...(x+n)) for n < 0. Throws PoleError when a factor of the
// n < 0 denominator product is zero.
BigRational pochhammer(long long x, long long n);

// Product of num/den over all factors; empty input gives 1.
BigRational product_ratio(const std::vector<std::pair<BigRational, BigRational>>& factors);

std::string to_decimal(const BigInt& v);

}  // namespace tilt
