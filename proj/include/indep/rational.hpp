// Exact nonnegative rationals for thresholds that must not be rounded.

#pragma once

#include <numeric>
#include <string>

#include "indep/errors.hpp"

namespace indep {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// Accepts "p", "p/q".
inline Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InputError("cannot parse rational: " + text);
    }
}

}  // namespace indep
