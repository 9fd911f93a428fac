#include <doctest.h>

#include "z3orb/cyc.hpp"
#include "z3orb/f4.hpp"
#include "z3orb/qseries.hpp"

#include <random>

using namespace z3orb;

namespace {

QSeries random_series(std::mt19937& rng, long D, const Rat& T) {
    QSeries s(D, T);
    std::uniform_int_distribution<int> nterms(0, 6), numer(-9, 9), expo(-4, 10);
    std::uniform_int_distribution<int> subdiv(0, 2);
    const long dens[3] = {1, 3, 8};
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long d = dens[subdiv(rng)];
        Rat e(expo(rng), d);
        if (!is_integer(e * D)) continue;
        s.add_coeff(e, Rat(numer(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("geometric series inverse") {
    QSeries one_minus_q = QSeries::constant(Rat(1), 72, Rat(3));
    one_minus_q.set_coeff(Rat(1), Rat(-1));
    QSeries inv = one_minus_q.pow_int(-1);
    QSeries expect = QSeries::zero(72, Rat(3));
    for (int k = 0; k <= 3; ++k) expect.set_coeff(Rat(k), Rat(1));
    CHECK(agree_to_truncation(inv, expect));
    CHECK(inv.trunc_order() >= 3);
}

TEST_CASE("substitute scales exponents") {
    QSeries s = QSeries::constant(Rat(1), 72, Rat(5));
    s.set_coeff(Rat(1), Rat(1));
    QSeries t = s.substitute(Rat(3));
    CHECK(t.coeff(Rat(3)) == 1);
    CHECK(t.coeff(Rat(1)) == 0);
    CHECK(t.coeff(Rat(0)) == 1);
}

TEST_CASE("multiplication by one is the identity") {
    QSeries s = QSeries::zero(72, Rat(4));
    s.set_coeff(Rat(-1), Rat(1));
    s.set_coeff(Rat(1), Rat(196884));
    QSeries one = QSeries::constant(Rat(1), 72, Rat(4));
    CHECK(agree_to_truncation(s * one, s));
}

TEST_CASE("negative powers require an invertible leading term") {
    QSeries z = QSeries::zero(72, Rat(4));
    CHECK_THROWS_AS(z.pow_int(-1), std::domain_error);
}

TEST_CASE("exponent denominators outside the bound are rejected") {
    QSeries s = QSeries::zero(72, Rat(4));
    CHECK_THROWS_AS(s.set_coeff(Rat(1, 5), Rat(1)), std::domain_error);
}

TEST_CASE("integer exponent part") {
    QSeries s = QSeries::zero(72, Rat(4));
    s.set_coeff(Rat(1, 3), Rat(5));
    s.set_coeff(Rat(1), Rat(2));
    s.set_coeff(Rat(4, 3), Rat(7));
    s.set_coeff(Rat(2), Rat(3));
    QSeries p = s.integer_exponent_part();
    CHECK(p.denom_bound() == 1);
    CHECK(p.coeff(Rat(1)) == 2);
    CHECK(p.coeff(Rat(2)) == 3);
    CHECK(p.terms().size() == 2);

    QSeries zero = QSeries::zero(72, Rat(4));
    CHECK(zero.integer_exponent_part().is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20251u);
    for (int trial = 0; trial < 60; ++trial) {
        QSeries a = random_series(rng, 72, Rat(8));
        QSeries b = random_series(rng, 72, Rat(8));
        QSeries c = random_series(rng, 72, Rat(8));
        CHECK(agree_to_truncation((a * b) * c, a * (b * c)));
        CHECK(agree_to_truncation(a * (b + c), a * b + a * c));
        CHECK(agree_to_truncation(a + b, b + a));
    }
}

TEST_CASE("substitute composes multiplicatively") {
    std::mt19937 rng(77u);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 72, Rat(6));
        QSeries lhs = a.substitute(Rat(2)).substitute(Rat(3));
        QSeries rhs = a.substitute(Rat(6));
        CHECK(agree_to_truncation(lhs, rhs));
    }
}

TEST_CASE("series text round-trip is canonical") {
    std::mt19937 rng(99u);
    QSeries a = random_series(rng, 72, Rat(6));
    QSeries b = QSeries::from_text(a.to_text());
    CHECK(a == b);
    CHECK(a.to_text() == b.to_text());
}

TEST_CASE("cyclotomic conjugation is an involutive ring automorphism") {
    const Cyc xi = Cyc::xi();
    CHECK(xi * xi.conj() == Cyc(Rat(1)));
    CHECK(Cyc(Rat(1)) + xi + xi * xi == Cyc());
    CHECK(xi.conj() == Cyc::xi_pow(2));

    std::mt19937 rng(5u);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        Cyc a(Rat(d(rng)), Rat(d(rng), 3));
        Cyc b(Rat(d(rng), 2), Rat(d(rng)));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(Rat(1)));
    }
    CHECK(Cyc(Rat(2), Rat(0)).is_real());
    CHECK(!xi.is_real());
}

TEST_CASE("F4 field structure") {
    const F4 all[4] = {F4::zero(), F4::one(), F4::omega(), F4::omega_bar()};
    CHECK(F4::omega() * F4::omega() == F4::omega_bar());
    CHECK(F4::omega() * F4::omega_bar() == F4::one());
    CHECK(F4::omega() + F4::one() == F4::omega_bar());
    CHECK(F4::omega().frobenius() == F4::omega_bar());
    CHECK(F4::one().frobenius() == F4::one());
    for (F4 a : all)
        for (F4 b : all) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (F4 c : all) {
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
}
