#pragma once

#include "z3orb/qseries.hpp"

#include <utility>
#include <vector>

namespace z3orb {

// Product of Dedekind eta factors: prod_i eta(q^{t_i})^{r_i}, each factor a
// positive rational scale t with an integer exponent r.  The represented
// series carries the prefactor q^{sum r*t/24}.
struct EtaQuotientSpec {
    std::vector<std::pair<Rat, long>> factors;

    // Leading exponent sum r*t/24.
    Rat leading_exponent() const;
};

// Exact q-expansion of the eta quotient up to the given exponent.
QSeries eta_quotient(const EtaQuotientSpec& spec, const Rat& order,
                     long denom_bound = QSeries::kDefaultDenomBound);

// Euler product prod_{n>=1} (1 - q^{t n}), expanded by explicit multiplication.
QSeries euler_product(const Rat& t, const Rat& order, long denom_bound);

// Independent oracle for the same product via the pentagonal number theorem:
// sum_{k in Z} (-1)^k q^{t k(3k-1)/2}.
QSeries euler_product_pentagonal(const Rat& t, const Rat& order, long denom_bound);

// E4 = 1 + 240 sum sigma_3(n) q^n.
QSeries eisenstein_E4(const Rat& order);
// Delta = eta(q)^24.
QSeries delta(const Rat& order);
// J = E4^3 / Delta - 744 (constant term zero).
QSeries j_series(const Rat& order);

// Theta series of the Leech lattice as a polynomial in E4 and Delta.
QSeries leech_theta_from_eisenstein(const Rat& order);

// Trace of an order-3 fixed-point-free isometry on the rank-24 lattice
// vertex algebra: eta(q)^12 / eta(q^3)^12.  The oracle expands
// q^{-1} prod_n [(1 - xi q^n)(1 - xi^2 q^n)]^{12} directly over Q(xi) and
// checks that every coefficient is real.
QSeries tau_trace_series(const Rat& order);
QSeries tau_trace_series_eigenvalue_oracle(const Rat& order);

}  // namespace z3orb
