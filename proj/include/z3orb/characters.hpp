#pragma once

#include "z3orb/qseries.hpp"

#include <array>

namespace z3orb {

// Multiplicities of the order-3 twist eigenvalues xi^j on the 24 ambient
// dimensions.  The Leech profile is j=1 -> 12, j=2 -> 12, j=0 -> 0; the
// untwisted profile puts all 24 in class 0.
struct TwistProfile {
    std::array<int, 3> multiplicity = {0, 0, 0};
    static constexpr int order = 3;

    static TwistProfile leech() { return {{0, 12, 12}}; }
    static TwistProfile untwisted_rank24() { return {{24, 0, 0}}; }

    int total_dimension() const { return multiplicity[0] + multiplicity[1] + multiplicity[2]; }

    // (1/(4p^2)) sum_j j (p - j) mult(j) with p = 3.
    Rat vacuum_weight() const;
};

// Graded dimension of the twisted free-boson space for the profile: multisets
// of parts n/3 (n >= 1) where a part of class n mod 3 comes in mult(n mod 3)
// colors, shifted by q^{vacuum_weight - 1}.  Direct combinatorial counting;
// no eta identities enter.
QSeries fock_character(const TwistProfile& profile, const Rat& order);

struct VSharpCharacter {
    QSeries ch_fixed;             // fixed-point subVOA
    QSeries ch_twisted_integral;  // one integral-weight twisted summand
    QSeries ch_total;             // ch_fixed + 2 * ch_twisted_integral
};

// Character of the orbifold extension, assembled from the Eisenstein route
// for the lattice theta function.  Exponent convention: the coefficient of
// q^{w-1} is the dimension of the weight-w subspace.
VSharpCharacter ch_vsharp_components(const Rat& order);

}  // namespace z3orb
