#include "z3orb/eta.hpp"

#include "z3orb/cyc.hpp"

#include <map>

namespace z3orb {

Rat EtaQuotientSpec::leading_exponent() const {
    Rat e(0);
    for (const auto& [t, r] : factors) e += t * r / 24;
    return e;
}

QSeries euler_product(const Rat& t, const Rat& order, long denom_bound) {
    QSeries acc = QSeries::constant(Rat(1), denom_bound, order);
    for (Rat nt = t; nt <= order; nt += t) {
        QSeries f = QSeries::constant(Rat(1), denom_bound, order);
        f.set_coeff(nt, Rat(-1));
        acc = (acc * f).truncated(order);
    }
    return acc.truncated(order);
}

QSeries euler_product_pentagonal(const Rat& t, const Rat& order, long denom_bound) {
    QSeries s = QSeries::zero(denom_bound, order);
    for (long k = 0;; ++k) {
        const Rat e1 = t * k * (3 * k - 1) / 2;
        const Rat e2 = t * k * (3 * k + 1) / 2;  // k -> -k
        if (e1 > order && e2 > order && k > 0) break;
        const Rat sign((k % 2 == 0) ? 1 : -1);
        if (e1 <= order) s.add_coeff(e1, sign);
        if (k > 0 && e2 <= order) s.add_coeff(e2, sign);
    }
    return s;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, const Rat& order, long denom_bound) {
    // Expand each factor to the order needed after the global prefactor shift.
    const Rat lead = spec.leading_exponent();
    const Rat prod_order = order - lead;
    QSeries acc = QSeries::constant(Rat(1), denom_bound, prod_order);
    for (const auto& [t, r] : spec.factors) {
        QSeries p = euler_product(t, prod_order, denom_bound);
        acc = (acc * p.pow_int(r)).truncated(prod_order);
    }
    return acc.shifted(lead);
}

QSeries eisenstein_E4(const Rat& order) {
    QSeries s = QSeries::constant(Rat(1), 1, order);
    const long n_max = static_cast<long>(to_ll(floor_div(numerator(order), denominator(order))));
    for (long n = 1; n <= n_max; ++n) {
        Int sigma3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) sigma3 += Int(d) * d * d;
        s.set_coeff(Rat(n), Rat(240 * sigma3));
    }
    return s;
}

QSeries delta(const Rat& order) {
    return eta_quotient({{{Rat(1), 24}}}, order, 1);
}

QSeries j_series(const Rat& order) {
    // Work a little past the requested order so the quotient is reliable there.
    const Rat work = order + 2;
    QSeries e4 = eisenstein_E4(work);
    QSeries dl = delta(work);
    QSeries j = (e4.pow_int(3) * dl.pow_int(-1)) - QSeries::constant(Rat(744), 1, work);
    return j.truncated(order);
}

QSeries leech_theta_from_eisenstein(const Rat& order) {
    QSeries e4 = eisenstein_E4(order);
    QSeries dl = delta(order);
    return (e4.pow_int(3) - dl.scaled(Rat(720))).truncated(order);
}

QSeries tau_trace_series(const Rat& order) {
    return eta_quotient({{{Rat(1), 12}, {Rat(3), -12}}}, order);
}

QSeries tau_trace_series_eigenvalue_oracle(const Rat& order) {
    // prod_n det(1 - tau q^n)^{-1} with tau eigenvalues xi, xi^2 of
    // multiplicity 12 each, shifted by the central charge term q^{-1}.
    const Rat work = order + 1;
    std::map<long, Cyc> acc;
    acc[0] = Cyc(Rat(1));
    const long n_max = static_cast<long>(to_ll(floor_div(numerator(work), denominator(work))));
    for (long n = 1; n <= n_max; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            for (long e = 1; e <= 2; ++e) {
                // multiply by (1 - xi^e q^n)^{-1} = sum_j xi^{e j} q^{n j}
                std::map<long, Cyc> next;
                for (const auto& [deg, c] : acc) {
                    for (long j = 0; deg + n * j <= n_max; ++j) {
                        Cyc add = c * Cyc::xi_pow(e * j);
                        auto [it, fresh] = next.try_emplace(deg + n * j, add);
                        if (!fresh) it->second += add;
                    }
                }
                acc = std::move(next);
            }
        }
    }
    QSeries s = QSeries::zero(1, work - 1);
    for (const auto& [deg, c] : acc) {
        if (!c.is_real())
            throw std::logic_error("tau-trace oracle produced a non-real coefficient");
        s.set_coeff(Rat(deg) - 1, c.re);
    }
    return s.truncated(order);
}

}  // namespace z3orb
