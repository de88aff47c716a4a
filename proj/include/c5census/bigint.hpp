#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace c5census {

using BigInt = mpz_class;

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt b;
    if (k > n) return b;  // 0
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// log2 of a positive big integer, accurate to double precision.
inline double big_log2(const BigInt& x) {
    signed long exp;
    double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

}  // namespace c5census
