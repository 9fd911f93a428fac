#include "z3orb/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace z3orb {

namespace {

// Digitwise base-3 helpers on discriminant labels.
int label_add(int a, int b) {
    int out = 0, p = 1;
    for (int k = 0; k < 6; ++k) {
        out += ((a % 3 + b % 3) % 3) * p;
        a /= 3;
        b /= 3;
        p *= 3;
    }
    return out;
}

int label_scale(int a, int c) {
    int out = 0, p = 1;
    for (int k = 0; k < 6; ++k) {
        out += ((a % 3) * c % 3) * p;
        a /= 3;
        p *= 3;
    }
    return out;
}

int label_neg(int a) { return label_scale(a, 2); }

}  // namespace

FusionRing::FusionRing(const K12Disc& disc) : disc_(&disc) {
    q_.resize(kSize);
    for (int idx = 0; idx < kSize; ++idx) q_[idx] = qform(label_of_index(idx));
}

ModuleLabel FusionRing::label_of_index(int idx) const {
    const int alpha = idx % 729;
    const F3 chi = static_cast<F3>((idx / 729) % 3);
    const uint8_t t = static_cast<uint8_t>((idx / 2187) % 3);
    if (t == 0) return ModuleLabel::s(alpha, chi);
    // alpha = -i a, chi = i x with i = t (and i^{-1} = i in F3).
    return ModuleLabel::t(label_neg(label_scale(alpha, t)), f3_mul(chi, t), t);
}

int FusionRing::index_of_label(const ModuleLabel& m) const {
    if (m.kind == ModuleLabel::Kind::S) return m.a + 729 * m.x;
    const int alpha = label_neg(label_scale(m.a, m.i));
    const F3 chi = f3_mul(m.x, m.i);
    return alpha + 729 * chi + 2187 * m.i;
}

ModuleLabel FusionRing::fuse(const ModuleLabel& m1, const ModuleLabel& m2) const {
    using K = ModuleLabel::Kind;
    if (m1.kind == K::S && m2.kind == K::S)
        return ModuleLabel::s(label_add(m1.a, m2.a), f3_add(m1.x, m2.x));
    if (m1.kind == K::S && m2.kind == K::T) {
        // S^a[x] + T^b[y;i] = T^{b - i a}[y + i x; i]
        int a = label_add(m2.a, label_neg(label_scale(m1.a, m2.i)));
        return ModuleLabel::t(a, f3_add(m2.x, f3_mul(m2.i, m1.x)), m2.i);
    }
    if (m1.kind == K::T && m2.kind == K::S) return fuse(m2, m1);
    if (m1.i != m2.i) {
        // T^a[x;1] + T^b[y;2] = S^{b-a}[x-y], symmetric in the two factors.
        const ModuleLabel& one = m1.i == 1 ? m1 : m2;
        const ModuleLabel& two = m1.i == 1 ? m2 : m1;
        return ModuleLabel::s(label_add(two.a, label_neg(one.a)), f3_sub(one.x, two.x));
    }
    // T^a[x;i] + T^b[y;i] = T^{-(a+b)}[-(x+y); 2i]
    return ModuleLabel::t(label_neg(label_add(m1.a, m2.a)),
                          f3_neg(f3_add(m1.x, m2.x)),
                          static_cast<uint8_t>(2 * m1.i % 3));
}

int FusionRing::fuse_index(int i1, int i2) {
    int out = 0, p = 1;
    for (int k = 0; k < 8; ++k) {
        out += ((i1 % 3 + i2 % 3) % 3) * p;
        i1 /= 3;
        i2 /= 3;
        p *= 3;
    }
    return out;
}

int FusionRing::negate_index(int idx) { return scale_index(idx, 2); }

int FusionRing::scale_index(int idx, int lambda) {
    int out = 0, p = 1;
    for (int k = 0; k < 8; ++k) {
        out += ((idx % 3) * lambda % 3) * p;
        idx /= 3;
        p *= 3;
    }
    return out;
}

F3 FusionRing::qform(const ModuleLabel& m) const {
    // 3 wt mod 3.  For S^a[x]: wt in |a|^2/2 + Z.  For T^a[x;i]:
    // 2(1 + x) plus the same |a|^2 contribution (the unique quadratic
    // extension compatible with the pairing formulas).
    const F3 half = f3_of(disc_->halfnorm3(m.a));
    if (m.kind == ModuleLabel::Kind::S) return half;
    return f3_add(half, f3_of(2 + 2 * m.x));
}

F3 FusionRing::bform(const ModuleLabel& m1, const ModuleLabel& m2) const {
    using K = ModuleLabel::Kind;
    const F3 p = disc_->pairing3(m1.a, m2.a);
    if (m1.kind == K::S && m2.kind == K::S) return p;
    if (m1.kind == K::S && m2.kind == K::T)
        return f3_of(-int(m2.i) * (p + m1.x));
    if (m1.kind == K::T && m2.kind == K::S)
        return f3_of(-int(m1.i) * (p + m2.x));
    return f3_of(int(m1.i) * int(m2.i) * (int(p) - m1.x - m2.x + 1));
}

F3 FusionRing::bform_index(int i1, int i2) const {
    return bform(label_of_index(i1), label_of_index(i2));
}

std::string FusionRing::serialize(const ModuleLabel& m) const {
    std::ostringstream os;
    os << (m.kind == ModuleLabel::Kind::S ? "S:" : "T:");
    int a = m.a;
    for (int k = 0; k < 6; ++k) {
        os << a % 3;
        a /= 3;
    }
    os << ":" << int(m.x);
    if (m.kind == ModuleLabel::Kind::T) os << ":" << int(m.i);
    return os.str();
}

ModuleLabel FusionRing::parse(const std::string& text) const {
    std::istringstream is(text);
    std::string kind, digits, xs, ts;
    if (!std::getline(is, kind, ':') || !std::getline(is, digits, ':') ||
        !std::getline(is, xs, ':'))
        throw std::invalid_argument("bad module label: " + text);
    if (digits.size() != 6) throw std::invalid_argument("bad label digits: " + text);
    int a = 0, p = 1;
    for (char c : digits) {
        if (c < '0' || c > '2') throw std::invalid_argument("bad label digit");
        a += (c - '0') * p;
        p *= 3;
    }
    F3 x = f3_of(std::stoi(xs));
    if (kind == "S") return ModuleLabel::s(a, x);
    if (kind != "T" || !std::getline(is, ts, ':'))
        throw std::invalid_argument("bad module label: " + text);
    int i = std::stoi(ts);
    if (i != 1 && i != 2) throw std::invalid_argument("twist index must be 1 or 2");
    return ModuleLabel::t(a, x, static_cast<uint8_t>(i));
}

}  // namespace z3orb
