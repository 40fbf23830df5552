#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "derspec/error.hpp"

namespace derspec {

// All arithmetic in the library is exact: arbitrary-precision integers
// everywhere, with rationals appearing only where a ratio is the result.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

inline ExactInt factorial(long long n) {
    if (n < 0) throw error(errc::bad_index, "factorial of a negative number");
    ExactInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Falling factorial power x(x-1)...(x-k+1); equals 1 when k = 0.
// Negative x is legal (such factors arise inside shifted-function terms).
inline ExactInt falling(const ExactInt& x, long long k) {
    if (k < 0) throw error(errc::bad_index, "falling factorial with negative exponent");
    ExactInt r = 1;
    for (long long t = 0; t < k; ++t) r *= x - t;
    return r;
}

inline ExactInt binomial(long long n, long long k) {
    if (n < 0) throw error(errc::bad_index, "binomial with negative upper argument");
    if (k < 0 || k > n) return 0;
    ExactInt num = falling(ExactInt(n), k);
    ExactInt den = factorial(k);
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw error(errc::internal_error, "binomial division not exact");
    return q;
}

} // namespace derspec
