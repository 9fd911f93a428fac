#include <doctest.h>

#include "z3orb/eta.hpp"
#include "z3orb/lattice.hpp"

#include <random>
#include <set>

using namespace z3orb;

TEST_CASE("base lattice of twelve doubled-hexagonal blocks") {
    GramLattice n = build_base();
    CHECK(n.rank() == 24);
    CHECK(n.is_even());
    CHECK(n.gram(0, 0) == Rat(4));
    CHECK(n.gram(0, 1) == Rat(-2));
    CHECK(n.gram(0, 2) == Rat(0));
    // det = 12^12
    Rat d = n.determinant();
    Rat expect(1);
    for (int i = 0; i < 12; ++i) expect *= 12;
    CHECK(d == expect);
}

TEST_CASE("glue map is compatible with the block rotation") {
    GlueVectorMap gv = GlueVectorMap::standard();
    Isometry tau = build_tau();
    GramLattice m = build_base(GlueSpec{0, 1});
    for (uint8_t c = 1; c < 4; ++c) {
        // tau(rep4(c)) == rep4(w*c) mod block lattice
        Vec24 v{};
        auto r = gv.rep4_at(0, c);
        v[0] = r[0]; v[1] = r[1];
        Vec24 tv = tau.apply(v);
        uint8_t wc = (F4(c) * F4::omega()).v;
        Vec24 w{};
        auto rw = gv.rep4_at(0, wc);
        w[0] = rw[0]; w[1] = rw[1];
        CHECK(m.contains(vec_sub(tv, w)));
    }
    for (uint8_t dsym = 1; dsym < 3; ++dsym) {
        Vec24 v{};
        auto r = gv.rep3_at(0, dsym);
        v[0] = r[0]; v[1] = r[1];
        Vec24 tv = tau.apply(v);
        CHECK(m.contains(vec_sub(tv, v)));
    }
    // 2*rep4 and 3*rep3 land in the block lattice
    for (uint8_t c = 1; c < 4; ++c) {
        Vec24 v{};
        auto r = gv.rep4_at(0, c);
        v[0] = 2 * r[0]; v[1] = 2 * r[1];
        CHECK(m.contains(v));
    }
    for (uint8_t dsym = 1; dsym < 3; ++dsym) {
        Vec24 v{};
        auto r = gv.rep3_at(0, dsym);
        v[0] = 3 * r[0]; v[1] = 3 * r[1];
        CHECK(m.contains(v));
    }
}

TEST_CASE("glued Leech lattice is even unimodular and rootless") {
    GlueVectorMap gv = GlueVectorMap::standard();
    GramLattice leech = glue_lattice(leech_spec(), gv);
    CHECK(leech.rank() == 24);
    CHECK(leech.is_even());
    CHECK(leech.determinant() == Rat(1));

    GramLattice n = build_base();
    CHECK(leech.index_of_sublattice(n) == Int(2985984));  // 2^12 * 3^6

    auto counts = short_vector_counts_glue(leech_spec(), gv, 12);
    CHECK(counts[0] == 1);
    CHECK(counts.count(6) == 0);   // no norm-2 roots
    CHECK(counts[12] == 196560);   // norm-4 minimal vectors
}

TEST_CASE("Leech theta matches the Eisenstein polynomial by enumeration") {
    GlueVectorMap gv = GlueVectorMap::standard();
    auto counts = short_vector_counts_glue(leech_spec(), gv, 12);
    QSeries theta = theta_from_counts(counts, Rat(2));
    CHECK(agree_to_truncation(theta, leech_theta_from_eisenstein(Rat(2))));
}

TEST_CASE("two orthogonal Coxeter-Todd copies glue to index 3^6") {
    GlueVectorMap gv = GlueVectorMap::standard();
    GramLattice leech = glue_lattice(leech_spec(), gv);
    GramLattice lc = glue_lattice(lc_spec(), gv);
    CHECK(lc.is_even());
    Rat expect(1);
    for (int i = 0; i < 12; ++i) expect *= 3;
    CHECK(lc.determinant() == expect);  // 3^12
    CHECK(leech.index_of_sublattice(lc) == Int(729));

    GramLattice k1 = glue_lattice(k12_spec(0), gv);
    GramLattice k2 = glue_lattice(k12_spec(1), gv);
    Rat det_k(1);
    for (int i = 0; i < 6; ++i) det_k *= 3;
    CHECK(k1.determinant() == det_k);
    CHECK(k2.determinant() == det_k);

    // Orthogonality and the direct-sum identity.
    for (const Vec24& a : k1.basis())
        for (const Vec24& b : k2.basis()) CHECK(scaled_ip(a, b) == 0);
    std::vector<Vec24> all = k1.basis();
    for (const Vec24& b : k2.basis()) all.push_back(b);
    CHECK(GramLattice::from_rows(all).equals(lc));
}

TEST_CASE("Coxeter-Todd short vectors by both engines") {
    GlueVectorMap gv = GlueVectorMap::standard();
    auto glue_counts = short_vector_counts_glue(k12_spec(0), gv, 12);
    CHECK(glue_counts[0] == 1);
    CHECK(glue_counts.count(6) == 0);
    CHECK(glue_counts[12] == 756);

    GramLattice k1 = glue_lattice(k12_spec(0), gv);
    auto generic_counts = short_vector_counts_generic(k1, 12);
    CHECK(generic_counts == glue_counts);
}

TEST_CASE("K12 discriminant group") {
    GlueVectorMap gv = GlueVectorMap::standard();
    K12Disc disc(0, gv);
    CHECK(disc.invariant_factors().size() == 6);
    for (const Int& f : disc.invariant_factors()) CHECK(f == 3);

    // Generators carry label e_i and have order 3.
    for (int i = 0; i < 6; ++i) {
        int p3 = 1;
        for (int j = 0; j < i; ++j) p3 *= 3;
        CHECK(disc.label_of_dual(disc.generators()[i]) == p3);
        CHECK(disc.lattice().contains(vec_scale(disc.generators()[i], 3)));
        CHECK(!disc.lattice().contains(disc.generators()[i]));
    }

    // Coset minimal norms and the quadratic form values.  The nonzero minima
    // realize 4/3, 2 and 8/3, split 252 / 224 / 252 across the three values
    // of the discriminant form.
    std::map<Rat, int> norms;
    int singular = 0;
    for (int lbl = 1; lbl < K12Disc::kLabels; ++lbl) {
        norms[disc.min_norm(lbl)]++;
        if (disc.q_disc(lbl) == 0) ++singular;
    }
    CHECK(norms == std::map<Rat, int>{{Rat(4, 3), 252}, {Rat(2), 224}, {Rat(8, 3), 252}});
    CHECK(singular == 224);
    CHECK(disc.min_norm(0) == Rat(0));

    // Dual route: per-coset vector counts must add up to the short-vector
    // counts of the full dual lattice, and the recorded minimum must be the
    // first populated norm.
    GramLattice dual = GramLattice::from_rows(disc.lattice().dual_basis());
    auto dual_counts = short_vector_counts_generic(dual, 8);
    std::map<long, long long> total;
    for (int lbl = 0; lbl < K12Disc::kLabels; ++lbl) {
        auto cc = disc.coset_vector_counts(lbl, 8);
        REQUIRE(!cc.empty());
        CHECK(Rat(cc.begin()->first, 3) == std::min(disc.min_norm(lbl), Rat(8, 3)));
        for (auto& [n3, c] : cc) total[n3] += c;
    }
    CHECK(total == dual_counts);

    // q values agree with 3*minnorm mod 3 and with the pairing diagonal.
    for (int lbl = 0; lbl < K12Disc::kLabels; ++lbl) {
        CHECK(disc.q_disc(lbl) == f3_of(2 * disc.halfnorm3(lbl)));
        // pairing is the polarization of q_{K12}: q(a+b)-q(a)-q(b) = 2*3<a|b>
        // spot-checked below on random pairs
    }
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> pick(0, 728);
    for (int trial = 0; trial < 300; ++trial) {
        int a = pick(rng), b = pick(rng);
        int sum = 0;
        int aa = a, bb = b;
        int digits[6];
        for (int i = 0; i < 6; ++i) {
            digits[i] = (aa % 3 + bb % 3) % 3;
            aa /= 3;
            bb /= 3;
        }
        for (int i = 5; i >= 0; --i) sum = sum * 3 + digits[5 - i];
        // recompute label of a+b via digits (little-endian base 3)
        int lbl_sum = 0, p3 = 1;
        for (int i = 0; i < 6; ++i) {
            lbl_sum += digits[i] * p3;
            p3 *= 3;
        }
        int lhs = (disc.q_disc(lbl_sum) + 6 - disc.q_disc(a) - disc.q_disc(b)) % 3;
        int rhs = (2 * disc.pairing3(a, b)) % 3;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pairing well-definedness across representative choice") {
    GlueVectorMap gv = GlueVectorMap::standard();
    K12Disc disc(0, gv);
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> pick(1, 728), coeff(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        int a = pick(rng), b = pick(rng);
        // Shift the representative of a by a random lattice vector.
        Vec24 shift{};
        for (const Vec24& bas : disc.lattice().basis())
            shift = vec_add(shift, vec_scale(bas, coeff(rng)));
        Vec24 ra = vec_add(disc.min_rep(a), shift);
        int64_t sip = scaled_ip(ra, disc.min_rep(b));
        REQUIRE(sip % 12 == 0);
        CHECK(f3_of(sip / 12) == disc.pairing3(a, b));
        // and 3|a|^2/2 stays fixed mod 3
        int64_t nrm = scaled_ip(ra, ra);
        REQUIRE(nrm % 24 == 0);
        CHECK(f3_of(nrm / 24) == f3_of(disc.halfnorm3(a)));
    }
}

TEST_CASE("tau is a fixed-point-free order-3 isometry preserving everything") {
    GlueVectorMap gv = GlueVectorMap::standard();
    Isometry tau = build_tau();
    CHECK(tau.preserves_form());
    Isometry tau3 = tau.compose(tau).compose(tau);
    CHECK(tau3.is_identity());
    // tau^2 + tau + 1 = 0 as matrices: apply to all unit vectors.
    Isometry tau2 = tau.compose(tau);
    for (int i = 0; i < 24; ++i) {
        Vec24 e{};
        e[i] = 6;
        Vec24 s = vec_add(vec_add(tau2.apply(e), tau.apply(e)), e);
        for (int c = 0; c < 24; ++c) CHECK(s[c] == 0);
    }

    GramLattice leech = glue_lattice(leech_spec(), gv);
    GramLattice lc = glue_lattice(lc_spec(), gv);
    CHECK(tau.preserves_lattice(leech));
    CHECK(tau.preserves_lattice(lc));

    K12Disc disc(0, gv);
    CHECK(tau_trivial_on_discriminant(disc, tau));
    CHECK(tau_trivial_on_discriminant(disc, Isometry::identity()));
}

TEST_CASE("h swaps the two Coxeter-Todd copies and commutes with tau") {
    GlueVectorMap gv = GlueVectorMap::standard();
    Isometry h = build_h();
    Isometry tau = build_tau();
    CHECK(h.preserves_form());

    GramLattice leech = glue_lattice(leech_spec(), gv);
    GramLattice lc = glue_lattice(lc_spec(), gv);
    CHECK(h.preserves_lattice(leech));
    CHECK(h.preserves_lattice(lc));

    GramLattice k1 = glue_lattice(k12_spec(0), gv);
    GramLattice k2 = glue_lattice(k12_spec(1), gv);
    std::vector<Vec24> img;
    for (const Vec24& b : k1.basis()) img.push_back(h.apply(b));
    CHECK(GramLattice::from_rows(img).equals(k2));

    Isometry ht = h.compose(tau), th = tau.compose(h);
    CHECK(ht.mat == th.mat);

    // Norm preservation spot check on random Leech vectors.
    std::mt19937 rng(3u);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        Vec24 v{};
        for (const Vec24& b : leech.basis())
            v = vec_add(v, vec_scale(b, coeff(rng)));
        CHECK(scaled_norm(h.apply(v)) == scaled_norm(v));
        CHECK(scaled_norm(tau.apply(v)) == scaled_norm(v));
    }
}

TEST_CASE("smith normal form on a known matrix") {
    // diag(2,6) example: [[4,-2],[-2,4]] has invariant factors 2 and 6.
    std::vector<std::vector<Int>> m = {{4, -2}, {-2, 4}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 6);
    // U * Uinv = identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Int acc = 0;
            for (int k = 0; k < 2; ++k) acc += s.U[i][k] * s.Uinv[k][j];
            CHECK(acc == (i == j ? 1 : 0));
        }
}
