#pragma once

#include "z3orb/rat.hpp"

namespace z3orb {

// Element of Q(xi) with xi a primitive cube root of unity, xi^2 + xi + 1 = 0.
// Stored as re + im*xi with rational coefficients; products reduce via
// xi^2 = -1 - xi.  Conjugation swaps xi and xi^2.
struct Cyc {
    Rat re;  // coefficient of 1
    Rat im;  // coefficient of xi

    Cyc() = default;
    Cyc(Rat r) : re(std::move(r)) {}
    Cyc(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Cyc xi() { return Cyc(Rat(0), Rat(1)); }
    static Cyc xi_pow(long k) {
        switch (((k % 3) + 3) % 3) {
            case 0: return Cyc(Rat(1));
            case 1: return xi();
            default: return Cyc(Rat(-1), Rat(-1));  // xi^2
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Cyc conj() const { return Cyc(re - im, -im); }

    // z * conj(z), always rational and >= 0 for z != 0.
    Rat norm() const { return re * re - re * im + im * im; }

    friend Cyc operator+(const Cyc& a, const Cyc& b) { return Cyc(a.re + b.re, a.im + b.im); }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return Cyc(a.re - b.re, a.im - b.im); }
    friend Cyc operator-(const Cyc& a) { return Cyc(-a.re, -a.im); }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        // (a1 + a2 xi)(b1 + b2 xi) = a1 b1 - a2 b2 + (a1 b2 + a2 b1 - a2 b2) xi
        Rat cross = a.im * b.im;
        return Cyc(a.re * b.re - cross, a.re * b.im + a.im * b.re - cross);
    }

    Cyc inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("inverse of zero in Q(xi)");
        Cyc c = conj();
        return Cyc(c.re / n, c.im / n);
    }

    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    Cyc& operator+=(const Cyc& o) { re += o.re; im += o.im; return *this; }
    Cyc& operator-=(const Cyc& o) { re -= o.re; im -= o.im; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
};

}  // namespace z3orb
