#pragma once

#include "z3orb/f3.hpp"
#include "z3orb/lattice.hpp"

#include <string>

namespace z3orb {

// Label of an irreducible module over the fixed-point subalgebra of one
// Coxeter-Todd lattice vertex algebra: untwisted S^a[x] or twisted T^a[x;i]
// with a a discriminant-group label (0..728), x in F3, i in {1,2}.
struct ModuleLabel {
    enum class Kind : uint8_t { S, T };
    Kind kind = Kind::S;
    int a = 0;
    F3 x = 0;
    uint8_t i = 0;  // twist class, only for Kind::T

    static ModuleLabel s(int a, F3 x) { return {Kind::S, a, x, 0}; }
    static ModuleLabel t(int a, F3 x, uint8_t i) { return {Kind::T, a, x, i}; }

    friend bool operator==(const ModuleLabel& l, const ModuleLabel& r) {
        return l.kind == r.kind && l.a == r.a && l.x == r.x && l.i == r.i;
    }
};

// The 6561 labels form an elementary abelian 3-group under the fusion
// product; indices 0..6560 encode the eight base-3 digits of the group
// coordinates (six discriminant digits, the x-digit, the twist digit), so
// fusion of indices is digitwise addition.  The quadratic form comes from
// the lowest weights, the bilinear form from the closed pairing formulas;
// their compatibility is a test target, not an assumption.
class FusionRing {
  public:
    static constexpr int kSize = 6561;

    explicit FusionRing(const K12Disc& disc);

    const K12Disc& disc() const { return *disc_; }

    ModuleLabel label_of_index(int idx) const;
    int index_of_label(const ModuleLabel& m) const;

    ModuleLabel fuse(const ModuleLabel& m1, const ModuleLabel& m2) const;
    static int fuse_index(int i1, int i2);
    static int negate_index(int idx);
    static int scale_index(int idx, int lambda);

    F3 qform(const ModuleLabel& m) const;
    F3 qform_index(int idx) const { return q_[idx]; }

    // Closed formulas with 3<a|b> taken from lattice representatives.
    F3 bform(const ModuleLabel& m1, const ModuleLabel& m2) const;
    F3 bform_index(int i1, int i2) const;
    // Polarization route: q(m1+m2) - q(m1) - q(m2).
    F3 bform_polarization(int i1, int i2) const {
        return f3_sub(f3_sub(q_[fuse_index(i1, i2)], q_[i1]), q_[i2]);
    }

    std::string serialize(const ModuleLabel& m) const;
    ModuleLabel parse(const std::string& text) const;

  private:
    const K12Disc* disc_;
    std::vector<F3> q_;
};

}  // namespace z3orb
