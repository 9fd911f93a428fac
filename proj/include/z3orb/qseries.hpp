#pragma once

#include "z3orb/rat.hpp"

#include <map>
#include <optional>
#include <string>

namespace z3orb {

// Truncated Laurent series in q with exact rational coefficients and
// fractional exponents.  Exponents e satisfy e * denom_bound in Z and
// e <= trunc_order; terms above the truncation order are unrepresented.
// Values are immutable in spirit: all operations return fresh series.
class QSeries {
  public:
    static constexpr long kDefaultDenomBound = 72;

    QSeries() : denom_bound_(kDefaultDenomBound), trunc_(0) {}
    QSeries(long denom_bound, Rat trunc_order)
        : denom_bound_(denom_bound), trunc_(std::move(trunc_order)) {}

    static QSeries zero(long denom_bound, const Rat& trunc);
    static QSeries constant(const Rat& c, long denom_bound, const Rat& trunc);
    // c * q^e
    static QSeries monomial(const Rat& c, const Rat& e, long denom_bound, const Rat& trunc);

    long denom_bound() const { return denom_bound_; }
    const Rat& trunc_order() const { return trunc_; }
    const std::map<Rat, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Rat& e) const;
    // Lowest stored exponent; empty for the zero series.
    std::optional<Rat> lowest_exponent() const;

    void set_coeff(const Rat& e, const Rat& c);
    void add_coeff(const Rat& e, const Rat& c);

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator-() const;

    QSeries scaled(const Rat& c) const;          // c * this
    QSeries shifted(const Rat& e) const;         // q^e * this
    QSeries pow_int(long k) const;               // negative k inverts the leading term
    QSeries substitute(const Rat& k) const;      // q -> q^k, k a positive rational
    QSeries integer_exponent_part() const;       // terms with integral exponent
    QSeries truncated(const Rat& new_trunc) const;

    // Dense text form used by the series cache: canonical, sorted by exponent.
    std::string to_text() const;
    static QSeries from_text(const std::string& text);

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void check_exponent(const Rat& e) const;

    long denom_bound_;
    Rat trunc_;
    std::map<Rat, Rat> terms_;
};

// True iff the two series have identical coefficients at every exponent
// up to min(trunc orders) inclusive.
bool agree_to_truncation(const QSeries& a, const QSeries& b);

}  // namespace z3orb
