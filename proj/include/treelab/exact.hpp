#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "treelab/errors.hpp"

namespace treelab {

// Exact signed 128-bit integer used for all counts. Overflow throws
// std::overflow_error rather than wrapping.
using BigInt = boost::multiprecision::checked_int128_t;

inline BigInt factorial(int m) {
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

// n (n-1) ... (n-k+1); the empty product (k = 0) is 1.
inline BigInt falling_factorial(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline BigInt ipow(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Quotient of an exact division; a nonzero remainder means the caller's
// formula was misused.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0 || num % den != 0)
        throw StructureError("nonexact integer division");
    return num / den;
}

}  // namespace treelab
