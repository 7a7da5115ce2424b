#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace sextic {

/// Exact integer used for every computed quantity. Inputs are small, but
/// classification arithmetic must never silently wrap.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, 2), zero for n < 2.
inline Int binom2(const Int& n) {
    if (n < 2) return 0;
    return n * (n - 1) / 2;
}

/// Exact division, throwing if the quotient is not integral.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("exact_div: non-integral quotient");
    return num / den;
}

/// Narrow to a machine integer (used when emitting JSON numbers).
inline long long to_longlong(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for a 64-bit field");
    return static_cast<long long>(n);
}

}  // namespace sextic
