#include "z3orb/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace z3orb {

void QSeries::check_exponent(const Rat& e) const {
    if (!is_integer(e * denom_bound_))
        throw std::domain_error("exponent denominator exceeds series bound: " +
                                to_string(e) + " with D=" + std::to_string(denom_bound_));
}

QSeries QSeries::zero(long denom_bound, const Rat& trunc) {
    return QSeries(denom_bound, trunc);
}

QSeries QSeries::constant(const Rat& c, long denom_bound, const Rat& trunc) {
    QSeries s(denom_bound, trunc);
    s.set_coeff(Rat(0), c);
    return s;
}

QSeries QSeries::monomial(const Rat& c, const Rat& e, long denom_bound, const Rat& trunc) {
    QSeries s(denom_bound, trunc);
    s.set_coeff(e, c);
    return s;
}

Rat QSeries::coeff(const Rat& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Rat> QSeries::lowest_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void QSeries::set_coeff(const Rat& e, const Rat& c) {
    check_exponent(e);
    if (e > trunc_) return;
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void QSeries::add_coeff(const Rat& e, const Rat& c) {
    check_exponent(e);
    if (e > trunc_ || c == 0) return;
    Rat& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::max(denom_bound_, o.denom_bound_), std::min(trunc_, o.trunc_));
    for (const auto& [e, c] : terms_) r.add_coeff(e, c);
    for (const auto& [e, c] : o.terms_) r.add_coeff(e, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator-() const {
    QSeries r(denom_bound_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // Reliable order of the product: terms of one factor beyond its
    // truncation multiply the other factor's lowest exponent.
    Rat t;
    if (terms_.empty() || o.terms_.empty()) {
        t = std::min(trunc_, o.trunc_);
    } else {
        t = std::min(trunc_ + *o.lowest_exponent(), o.trunc_ + *lowest_exponent());
    }
    QSeries r(std::max(denom_bound_, o.denom_bound_), t);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Rat e = e1 + e2;
            if (e > t) break;  // o.terms_ sorted ascending
            r.add_coeff(e, c1 * c2);
        }
    }
    return r;
}

QSeries QSeries::scaled(const Rat& c) const {
    QSeries r(denom_bound_, trunc_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

QSeries QSeries::shifted(const Rat& e) const {
    QSeries r(denom_bound_, trunc_ + e);
    for (const auto& [e1, c] : terms_) {
        r.check_exponent(e1 + e);
        r.terms_[e1 + e] = c;
    }
    return r;
}

QSeries QSeries::pow_int(long k) const {
    if (k == 0) return constant(Rat(1), denom_bound_, trunc_);
    if (k > 0) {
        QSeries acc = *this;
        // small exponents only; repeated multiplication keeps truncation tight
        for (long i = 1; i < k; ++i) acc = acc * *this;
        return acc;
    }
    // Inversion: a = c q^l (1 + u) with u of strictly positive order, so
    // 1/a = c^{-1} q^{-l} sum (-u)^j.
    if (terms_.empty())
        throw std::domain_error("inverse of the zero series");
    const Rat l = *lowest_exponent();
    const Rat lead = terms_.begin()->second;
    QSeries u = shifted(-l).scaled(Rat(1) / lead);
    u.terms_.erase(Rat(0));  // u = a/(c q^l) - 1
    // (1+u)^{-1} is reliable to the order u is, i.e. trunc - l.
    Rat t = trunc_ - l;
    QSeries inv = constant(Rat(1), denom_bound_, t);
    QSeries upow = constant(Rat(1), denom_bound_, t);
    if (!u.terms_.empty()) {
        const Rat step = *u.lowest_exponent();
        Rat reach(0);
        long j = 1;
        while (reach <= t) {
            upow = upow * u;
            inv = (j % 2 == 1) ? inv - upow : inv + upow;
            reach += step;
            ++j;
        }
    }
    QSeries base = inv.shifted(-l).scaled(Rat(1) / lead);
    return (k == -1) ? base : base.pow_int(-k);
}

QSeries QSeries::substitute(const Rat& k) const {
    if (k <= 0) throw std::domain_error("substitute requires a positive scale");
    QSeries r(denom_bound_, trunc_ * k);
    for (const auto& [e, c] : terms_) {
        r.check_exponent(e * k);
        r.terms_[e * k] = c;
    }
    return r;
}

QSeries QSeries::integer_exponent_part() const {
    Rat t(floor_div(numerator(trunc_), denominator(trunc_)));
    QSeries r(1, t);
    for (const auto& [e, c] : terms_)
        if (is_integer(e)) r.terms_[e] = c;
    return r;
}

QSeries QSeries::truncated(const Rat& new_trunc) const {
    QSeries r(denom_bound_, std::min(trunc_, new_trunc));
    for (const auto& [e, c] : terms_) {
        if (e > r.trunc_) break;
        r.terms_[e] = c;
    }
    return r;
}

std::string QSeries::to_text() const {
    std::ostringstream os;
    os << "qseries D=" << denom_bound_ << " T=" << to_string(trunc_) << "\n";
    for (const auto& [e, c] : terms_)
        os << to_string(e) << " " << to_string(c) << "\n";
    return os.str();
}

QSeries QSeries::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag, dtok, ttok;
    if (!(is >> tag >> dtok >> ttok) || tag != "qseries" ||
        dtok.rfind("D=", 0) != 0 || ttok.rfind("T=", 0) != 0)
        throw std::runtime_error("bad qseries text header");
    QSeries s(std::stol(dtok.substr(2)), Rat(ttok.substr(2)));
    std::string et, ct;
    while (is >> et >> ct) s.set_coeff(Rat(et), Rat(ct));
    return s;
}

bool agree_to_truncation(const QSeries& a, const QSeries& b) {
    const Rat t = std::min(a.trunc_order(), b.trunc_order());
    for (const auto& [e, c] : a.terms())
        if (e <= t && b.coeff(e) != c) return false;
    for (const auto& [e, c] : b.terms())
        if (e <= t && a.coeff(e) != c) return false;
    return true;
}

}  // namespace z3orb
