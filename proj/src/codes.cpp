#include "z3orb/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace z3orb {

namespace {

uint8_t sym_add(CodeField f, uint8_t a, uint8_t b) {
    return f == CodeField::F3 ? f3_add(a, b) : (F4(a) + F4(b)).v;
}

uint8_t sym_scale(CodeField f, uint8_t a, uint8_t s) {
    return f == CodeField::F3 ? f3_mul(a, s) : (F4(a) * F4(s)).v;
}

int field_order(CodeField f) { return f == CodeField::F3 ? 3 : 4; }

char sym_char(CodeField f, uint8_t a) {
    return f == CodeField::F3 ? static_cast<char>('0' + a) : F4(a).symbol();
}

uint8_t sym_from_char(CodeField f, char c) {
    if (f == CodeField::F3) {
        if (c < '0' || c > '2') throw std::invalid_argument("bad F3 symbol");
        return static_cast<uint8_t>(c - '0');
    }
    return F4::from_symbol(c).v;
}

}  // namespace

LinearCode::LinearCode(CodeField field, std::vector<Codeword> generator_rows)
    : field_(field), rows_(std::move(generator_rows)) {
    if (rows_.empty()) throw std::invalid_argument("empty generator matrix");
    length_ = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != length_) throw std::invalid_argument("ragged generator matrix");

    // Rank check by Gaussian elimination on a copy.
    std::vector<Codeword> m = rows_;
    size_t rank = 0;
    for (size_t col = 0; col < length_ && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            // eliminate: row_r -= (m[r][col]/m[rank][col]) * row_rank
            uint8_t factor;
            if (field_ == CodeField::F3) {
                factor = f3_mul(m[r][col], f3_inv(m[rank][col]));
                for (size_t c = 0; c < length_; ++c)
                    m[r][c] = f3_sub(m[r][c], f3_mul(factor, m[rank][c]));
            } else {
                F4 inv = F4(m[rank][col]) * F4(m[rank][col]);  // x^-1 = x^2 for x != 0
                if (F4(m[rank][col]) == F4::one()) inv = F4::one();
                factor = (F4(m[r][col]) * inv).v;
                for (size_t c = 0; c < length_; ++c)
                    m[r][c] = (F4(m[r][c]) - F4(factor) * F4(m[rank][c])).v;
            }
        }
        ++rank;
    }
    if (rank != rows_.size())
        throw std::invalid_argument("generator rows are linearly dependent");
}

size_t LinearCode::size() const {
    size_t n = 1;
    for (size_t i = 0; i < rank(); ++i) n *= field_order(field_);
    return n;
}

std::vector<Codeword> LinearCode::enumerate(size_t cap) const {
    if (size() > cap) throw std::runtime_error("code too large to enumerate");
    const int q = field_order(field_);
    std::vector<Codeword> out;
    out.reserve(size());
    std::vector<int> msg(rank(), 0);
    for (;;) {
        Codeword w(length_, 0);
        for (size_t i = 0; i < rank(); ++i) {
            if (msg[i] == 0) continue;
            for (size_t c = 0; c < length_; ++c)
                w[c] = sym_add(field_, w[c],
                               sym_scale(field_, rows_[i][c], static_cast<uint8_t>(msg[i])));
        }
        out.push_back(std::move(w));
        size_t i = 0;
        while (i < msg.size() && ++msg[i] == q) msg[i++] = 0;
        if (i == msg.size()) break;
    }
    return out;
}

std::map<int, long long> LinearCode::weight_distribution() const {
    std::map<int, long long> dist;
    for (const auto& w : enumerate()) {
        int wt = 0;
        for (uint8_t s : w) wt += (s != 0);
        ++dist[wt];
    }
    return dist;
}

int LinearCode::minimum_nonzero_weight() const {
    auto dist = weight_distribution();
    for (const auto& [w, n] : dist)
        if (w > 0 && n > 0) return w;
    return 0;
}

bool LinearCode::contains(const Codeword& w) const {
    auto words = enumerate();
    return std::find(words.begin(), words.end(), w) != words.end();
}

bool LinearCode::is_self_orthogonal() const {
    for (const auto& u : rows_) {
        for (const auto& v : rows_) {
            if (field_ == CodeField::F3) {
                int s = 0;
                for (size_t c = 0; c < length_; ++c) s += u[c] * v[c];
                if (s % 3 != 0) return false;
            } else {
                F4 s = F4::zero();
                for (size_t c = 0; c < length_; ++c) s = s + F4(u[c]) * F4(v[c]).conj();
                if (!s.is_zero()) return false;
            }
        }
    }
    return true;
}

std::string LinearCode::to_text() const {
    std::ostringstream os;
    os << (field_ == CodeField::F3 ? "F3" : "F4") << " " << length_ << " " << rank() << "\n";
    for (const auto& r : rows_) {
        for (uint8_t s : r) os << sym_char(field_, s);
        os << "\n";
    }
    return os.str();
}

LinearCode LinearCode::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string ftok;
    size_t n, k;
    if (!(is >> ftok >> n >> k)) throw std::runtime_error("bad code text header");
    CodeField f = ftok == "F3" ? CodeField::F3 : CodeField::F4;
    std::vector<Codeword> rows;
    std::string line;
    while (rows.size() < k && is >> line) {
        if (line.size() != n) throw std::runtime_error("bad code row length");
        Codeword w(n);
        for (size_t c = 0; c < n; ++c) w[c] = sym_from_char(f, line[c]);
        rows.push_back(std::move(w));
    }
    if (rows.size() != k) throw std::runtime_error("missing code rows");
    return LinearCode(f, std::move(rows));
}

MonomialMap MonomialMap::identity(size_t n) {
    MonomialMap m;
    m.perm.resize(n);
    m.twist.assign(n, 0);
    for (size_t i = 0; i < n; ++i) m.perm[i] = static_cast<int>(i);
    return m;
}

MonomialMap MonomialMap::compose(const MonomialMap& inner) const {
    MonomialMap out;
    const size_t n = perm.size();
    out.perm.resize(n);
    out.twist.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.perm[i] = inner.perm[perm[i]];
        out.twist[i] = static_cast<uint8_t>(twist[i] ^ inner.twist[perm[i]]);
    }
    return out;
}

bool MonomialMap::is_involution() const {
    MonomialMap sq = compose(*this);
    MonomialMap id = identity(perm.size());
    return sq.perm == id.perm && sq.twist == id.twist;
}

Codeword MonomialMap::apply(CodeField field, const Codeword& w) const {
    Codeword out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        uint8_t s = w[perm[i]];
        if (twist[i]) s = (field == CodeField::F3) ? f3_neg(s) : F4(s).frobenius().v;
        out[i] = s;
    }
    return out;
}

LinearCode apply_map(const LinearCode& code, const MonomialMap& m) {
    std::vector<Codeword> rows;
    rows.reserve(code.rank());
    for (const auto& r : code.generator_rows()) rows.push_back(m.apply(code.field(), r));
    return LinearCode(code.field(), std::move(rows));
}

bool is_invariant(const LinearCode& code, const MonomialMap& m) {
    auto a = code.enumerate();
    auto b = apply_map(code, m).enumerate();
    std::set<Codeword> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    return sa == sb;
}

LinearCode tetracode() {
    return LinearCode(CodeField::F3, {{1, 1, 1, 0}, {1, 2, 0, 1}});
}

LinearCode hexacode() {
    // Rows are (phi(1), phi(w), phi(W), a, b, c) for phi(x) = a x^2 + b x + c.
    const uint8_t w = 2, W = 3;
    return LinearCode(CodeField::F4, {{1, W, w, 1, 0, 0},
                                      {1, w, W, 0, 1, 0},
                                      {1, 1, 1, 0, 0, 1}});
}

LinearCode glue_code_D() {
    return LinearCode(CodeField::F3, {{1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                                      {1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0},
                                      {0, 0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 1}});
}

LinearCode glue_code_C() {
    LinearCode h = hexacode();
    std::vector<Codeword> rows;
    for (int half = 0; half < 2; ++half) {
        for (const auto& r : h.generator_rows()) {
            Codeword w(12, 0);
            for (size_t c = 0; c < 6; ++c) w[6 * half + c] = r[c];
            rows.push_back(std::move(w));
        }
    }
    return LinearCode(CodeField::F4, std::move(rows));
}

MonomialMap half_swap_negate() {
    MonomialMap m;
    m.perm = {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5};
    m.twist = {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1};
    return m;
}

MonomialMap half_swap() {
    MonomialMap m;
    m.perm = {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5};
    m.twist.assign(12, 0);
    return m;
}

}  // namespace z3orb
