#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace z3orb {

// Exact scalars used throughout the toolkit. No floating point anywhere:
// every check is an exact integer / rational / F3 identity.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("integer does not fit in long long");
    return static_cast<long long>(v);
}

// Euclidean-style mod: result in {0,1,2} for any integer.
inline int mod3(const Int& v) {
    int m = static_cast<int>(v % 3);
    return m < 0 ? m + 3 : m;
}

// Reduces an integer-valued rational mod 3; throws if not an integer.
inline int mod3(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("mod3 of non-integer rational");
    return mod3(numerator(r));
}

// floor(a/b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// floor(sqrt(n)) for n >= 0, exact.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (static_cast<unsigned>(msb(n)) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    return x;
}

// floor(sqrt(r)) over the rationals.
inline Int rat_sqrt_floor(const Rat& r) {
    if (r < 0) throw std::domain_error("sqrt of negative rational");
    const Int p = numerator(r), q = denominator(r);
    return isqrt_floor(p * q) / q;
}

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace z3orb
