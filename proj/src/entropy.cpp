#include "c5census/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "c5census/bigint.hpp"

namespace c5census {

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double h_exponent(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("h_exponent: c outside (0,1)");
    if (c < 0.25) return binary_entropy(2.0 * c) / 2.0;
    if (c <= 0.75) return 0.5;
    return binary_entropy(2.0 * c - 1.0) / 2.0;
}

static double big_r(double x) {
    double y = x * (1.0 - x);
    return y * y * y * y;
}

double r_rate(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("r_rate: c outside (0,1)");
    double v;
    if (c < 0.25) v = big_r(2.0 * c);
    else if (c <= 0.75) v = 1.0 / 256.0;  // (1/4)^4
    else v = big_r(2.0 * c - 1.0);
    return v / 72.0;
}

static Frac frac_pow4(const Frac& f) {
    return (f * f) * (f * f);
}

Frac r_rate_exact(const Frac& c) {
    if (c.num == 0 || c.num >= c.den) throw std::domain_error("r_rate_exact: c outside (0,1)");
    const Frac quarter(1, 4);
    const Frac threeq(3, 4);
    Frac v(0, 1);
    if (c < quarter) {
        Frac x(2 * c.num, c.den);
        v = frac_pow4(x) * frac_pow4(Frac(x.den - x.num, x.den));
    } else if (c <= threeq) {
        v = Frac(1, 256);
    } else {
        // 2c - 1 = (2 num - den) / den
        Frac x(2 * c.num - c.den, c.den);
        v = frac_pow4(x) * frac_pow4(Frac(x.den - x.num, x.den));
    }
    return v * Frac(1, 72);
}

double subgraph_exponent(int r, double c, bool* beyond) {
    if (r < 3) throw std::invalid_argument("subgraph_exponent: need r >= 3");
    if (!(c > 0.0)) throw std::domain_error("subgraph_exponent: need c > 0");
    double edge = static_cast<double>(r - 2) / (r - 1);
    if (beyond) *beyond = false;
    if (c >= edge) {
        if (beyond) *beyond = true;
        return 0.0;
    }
    return edge * binary_entropy(c / edge);
}

double log2_binomial(long long m, long long k) {
    if (m < 0 || k < 0 || k > m) throw std::invalid_argument("log2_binomial: need 0 <= k <= m");
    if (k == 0 || k == m) return 0.0;
    if (m <= kLog2BinomialExactMax) {
        return big_log2(big_binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)));
    }
    double lm = static_cast<double>(m), lk = static_cast<double>(k);
    return (std::lgamma(lm + 1.0) - std::lgamma(lk + 1.0) - std::lgamma(lm - lk + 1.0)) /
           std::log(2.0);
}

SandwichReport entropy_sandwich_check(long long m, const Frac& c, double gamma) {
    if (m < 0) throw std::invalid_argument("entropy_sandwich_check: m < 0");
    if (gamma <= 0) throw std::invalid_argument("entropy_sandwich_check: gamma must be positive");
    unsigned __int128 prod = static_cast<unsigned __int128>(m) * c.num;
    if (prod % c.den != 0)
        throw std::invalid_argument("entropy_sandwich_check: c*m is not integral");
    long long k = static_cast<long long>(prod / c.den);

    SandwichReport rep;
    double hh = binary_entropy(c.to_double());
    rep.log2_binom = log2_binomial(m, k);
    rep.upper = static_cast<double>(m) * hh;
    rep.lower = rep.upper - gamma * static_cast<double>(m);
    rep.deficit = m > 0 ? (rep.upper - rep.log2_binom) / static_cast<double>(m) : 0.0;
    // 1e-9 slack absorbs float round-off at the k=0 / k=m equality points
    rep.ok = rep.lower <= rep.log2_binom + 1e-9 && rep.log2_binom <= rep.upper + 1e-9;
    return rep;
}

}  // namespace c5census
