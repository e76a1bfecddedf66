#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qtcat {

// Exact arithmetic used throughout: arbitrary-precision integers for
// counts and determinant pivots, rationals for linear-combination
// coefficients (the 1/(p!q!) normalizations are not integral).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Falling factorial n(n-1)...(n-k+1); zero when k > n.
inline Int falling(int n, int k) {
    if (k < 0) throw std::invalid_argument("falling: negative step count");
    if (k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

// Canonical "a/b" form, denominator always present and positive.
inline std::string fraction_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Human-facing form: denominator omitted when 1.
inline std::string pretty_fraction(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("fraction with zero denominator: " + s);
    return Rat(num, den);
}

}  // namespace qtcat
