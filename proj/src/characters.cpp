#include "z3orb/characters.hpp"

#include "z3orb/eta.hpp"

#include <vector>

namespace z3orb {

Rat TwistProfile::vacuum_weight() const {
    Rat w(0);
    for (int j = 0; j < order; ++j)
        w += Rat(j * (order - j) * multiplicity[j], 4 * order * order);
    return w;
}

namespace {

// Multiset coefficient C(colors + k - 1, k).
Int multichoose(int colors, long k) {
    if (k == 0) return 1;
    if (colors == 0) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= colors + i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

QSeries fock_character(const TwistProfile& profile, const Rat& order) {
    const Rat vac = profile.vacuum_weight();
    const Rat shift = vac - 1;
    // Count in units of 1/3: a part n/3 contributes n.
    const Rat span = order - shift;
    if (span < 0) return QSeries::zero(QSeries::kDefaultDenomBound, order);
    const Rat span3 = span * 3;
    long level_max = static_cast<long>(to_ll(floor_div(numerator(span3), denominator(span3))));

    // counts[s][L]: multisets of colored parts of size <= s with total L.
    std::vector<Int> prev(level_max + 1, 0), cur;
    prev[0] = 1;
    for (long s = 1; s <= level_max; ++s) {
        const int colors = profile.multiplicity[s % 3];
        cur.assign(level_max + 1, 0);
        for (long rem = 0; rem <= level_max; ++rem) {
            if (prev[rem] == 0) continue;
            for (long k = 0; rem + k * s <= level_max; ++k) {
                Int ways = multichoose(colors, k);
                if (ways != 0) cur[rem + k * s] += prev[rem] * ways;
            }
        }
        prev.swap(cur);
    }
    QSeries out = QSeries::zero(QSeries::kDefaultDenomBound, order);
    for (long L = 0; L <= level_max; ++L)
        if (prev[L] != 0) out.set_coeff(shift + Rat(L, 3), Rat(prev[L]));
    return out;
}

VSharpCharacter ch_vsharp_components(const Rat& order) {
    VSharpCharacter out;

    // Fixed sector: (Theta_Lambda / eta^24 + 2 * eta(q)^12/eta(q^3)^12) / 3.
    const Rat work = order + 2;
    QSeries theta = leech_theta_from_eisenstein(work);
    QSeries graded = theta * delta(work).pow_int(-1);
    QSeries trace = tau_trace_series(work);
    out.ch_fixed = (graded + trace.scaled(Rat(2))).scaled(Rat(1, 3)).truncated(order);
    for (const auto& [e, c] : out.ch_fixed.terms()) {
        if (!is_integer(c) || c < 0)
            throw std::logic_error("fixed-sector character has a non-integral or negative "
                                   "coefficient at exponent " + to_string(e));
    }

    // Twisted sector: integral part of 3^6 * eta(q)^12 / eta(q^{1/3})^12.
    QSeries twisted = eta_quotient({{{Rat(1), 12}, {Rat(1, 3), -12}}}, order);
    out.ch_twisted_integral = twisted.scaled(Rat(729)).integer_exponent_part();

    out.ch_total = out.ch_fixed + out.ch_twisted_integral.scaled(Rat(2));
    return out;
}

}  // namespace z3orb
