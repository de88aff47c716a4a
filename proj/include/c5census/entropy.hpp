#pragma once

#include "c5census/rational.hpp"

namespace c5census {

// All exponents are in bits (base-2 logs).

// H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
// Throws outside [0,1].
double binary_entropy(double x);

// Piecewise density exponent:
//   H(2c)/2 for 0 < c < 1/4,  1/2 for 1/4 <= c <= 3/4,  H(2c-1)/2 above.
// Defined on the open interval only; throws at c <= 0 or c >= 1.
double h_exponent(double c);

// r(c) = (1/72) * { R(2c) | (1/4)^4 | R(2c-1) } with R(x) = x^4 (1-x)^4,
// branches split at 1/4 and 3/4. Strictly positive on (0,1).
double r_rate(double c);

// Exact rational r(c) for rational c. The reduced denominator of c must be
// small enough that 72 * den^8 fits in 64 bits (den <= 150).
Frac r_rate_exact(const Frac& c);

// ((r-2)/(r-1)) * H(c (r-1)/(r-2)) for 0 < c < (r-2)/(r-1); r >= 3.
// For c at or above (r-2)/(r-1) the value is 0; *beyond is set when given.
double subgraph_exponent(int r, double c, bool* beyond = nullptr);

// log2 C(m, k), exact big-integer arithmetic for m <= kLog2BinomialExactMax
// and a log-gamma evaluation beyond it; relative error <= 1e-9 either way.
inline constexpr long long kLog2BinomialExactMax = 10000;
double log2_binomial(long long m, long long k);

struct SandwichReport {
    bool ok = false;
    double log2_binom = 0;    // log2 C(m, cm)
    double upper = 0;         // m H(c)
    double lower = 0;         // m H(c) - gamma m
    double deficit = 0;       // (m H(c) - log2 C(m, cm)) / m
};

// Checks m H(c) - gamma m <= log2 C(m, cm) <= m H(c). cm must be integral.
SandwichReport entropy_sandwich_check(long long m, const Frac& c, double gamma);

}  // namespace c5census
