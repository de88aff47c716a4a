#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace c5census {

// Exact non-negative fraction with a 64-bit numerator and denominator.
// Intermediate products run through 128 bits; construction and arithmetic
// throw on overflow instead of wrapping.
struct Frac {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Frac() = default;
    Frac(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        using u128 = unsigned __int128;
        return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }

    friend Frac operator*(const Frac& a, const Frac& b) {
        using u128 = unsigned __int128;
        u128 n = static_cast<u128>(a.num) * b.num;
        u128 d = static_cast<u128>(a.den) * b.den;
        return from_u128(n, d);
    }
    friend Frac operator+(const Frac& a, const Frac& b) {
        using u128 = unsigned __int128;
        u128 n = static_cast<u128>(a.num) * b.den + static_cast<u128>(b.num) * a.den;
        u128 d = static_cast<u128>(a.den) * b.den;
        return from_u128(n, d);
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

private:
    static Frac from_u128(unsigned __int128 n, unsigned __int128 d) {
        unsigned __int128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > UINT64_MAX || d > UINT64_MAX)
            throw std::overflow_error("Frac: 64-bit overflow after reduction");
        Frac f;
        f.num = static_cast<std::uint64_t>(n);
        f.den = static_cast<std::uint64_t>(d);
        return f;
    }
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b) { auto t = a % b; a = b; b = t; }
        return a ? a : 1;
    }
};

// p^a * (1-p)^b for rational p, exact.
inline Frac pow_weight(const Frac& p, int a, int b) {
    Frac r(1, 1);
    Frac q(p.den - p.num, p.den);
    for (int i = 0; i < a; ++i) r = r * p;
    for (int i = 0; i < b; ++i) r = r * q;
    return r;
}

}  // namespace c5census
