#pragma once

#include <cstdint>
#include <stdexcept>

namespace z3orb {

// The field with four elements {0, 1, w, W} where w^2 = w + 1 and W = w^2
// is the conjugate of w.  Encoded on two bits: 0 -> 0, 1 -> 1, 2 -> w, 3 -> W.
// Addition is XOR of the bit pairs; the Frobenius x -> x^2 swaps w and W.
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t x) : v(x) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 omega() { return F4(2); }
    static constexpr F4 omega_bar() { return F4(3); }

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(static_cast<uint8_t>(a.v ^ b.v)); }
    friend constexpr F4 operator-(F4 a, F4 b) { return a + b; }

    friend constexpr F4 operator*(F4 a, F4 b) {
        // w*w = W, w*W = 1, W*W = w
        if (a.v == 0 || b.v == 0) return F4(0);
        if (a.v == 1) return b;
        if (b.v == 1) return a;
        if (a.v == b.v) return F4(static_cast<uint8_t>(a.v == 2 ? 3 : 2));
        return F4(1);
    }

    friend constexpr bool operator==(F4 a, F4 b) { return a.v == b.v; }
    friend constexpr bool operator!=(F4 a, F4 b) { return a.v != b.v; }
    friend constexpr bool operator<(F4 a, F4 b) { return a.v < b.v; }

    constexpr F4 frobenius() const { return F4(static_cast<uint8_t>(v < 2 ? v : 5 - v)); }
    constexpr F4 conj() const { return frobenius(); }

    constexpr bool is_zero() const { return v == 0; }

    char symbol() const { return "01wW"[v]; }
    static F4 from_symbol(char c) {
        switch (c) {
            case '0': return F4(0);
            case '1': return F4(1);
            case 'w': return F4(2);
            case 'W': return F4(3);
            default: throw std::invalid_argument("bad F4 symbol");
        }
    }
};

}  // namespace z3orb
