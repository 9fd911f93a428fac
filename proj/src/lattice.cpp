#include "z3orb/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace z3orb {

namespace {

constexpr int64_t kG2[2][2] = {{4, -2}, {-2, 4}};

int64_t block_ip(int64_t a1, int64_t a2, int64_t b1, int64_t b2) {
    return a1 * (kG2[0][0] * b1 + kG2[0][1] * b2) + a2 * (kG2[1][0] * b1 + kG2[1][1] * b2);
}

}  // namespace

int64_t scaled_ip(const Vec24& u, const Vec24& v) {
    int64_t s = 0;
    for (int b = 0; b < 12; ++b)
        s += block_ip(u[2 * b], u[2 * b + 1], v[2 * b], v[2 * b + 1]);
    return s;
}

Vec24 vec_add(const Vec24& a, const Vec24& b) {
    Vec24 r;
    for (int i = 0; i < 24; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec24 vec_sub(const Vec24& a, const Vec24& b) {
    Vec24 r;
    for (int i = 0; i < 24; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec24 vec_scale(const Vec24& a, int64_t c) {
    Vec24 r;
    for (int i = 0; i < 24; ++i) r[i] = a[i] * c;
    return r;
}

GlueVectorMap GlueVectorMap::standard() {
    GlueVectorMap g;
    g.rep4 = {{{0, 0}, {3, 0}, {0, 3}, {3, 3}}};   // 0, e1/2, e2/2, (e1+e2)/2
    g.rep3 = {{{0, 0}, {4, 2}, {8, 4}}};           // 0, 2f1, 4f1
    return g;
}

std::array<int64_t, 2> GlueVectorMap::rep4_at(int block, uint8_t sym) const {
    if (sym >= 2 && ((frobenius_mask >> block) & 1)) sym = static_cast<uint8_t>(5 - sym);
    return rep4[sym];
}

std::array<int64_t, 2> GlueVectorMap::rep3_at(int /*block*/, uint8_t sym) const {
    return rep3[sym];
}

// ---------------------------------------------------------------------------
// Hermite normal form over Z on scaled coordinate rows.

namespace {

std::vector<Vec24> hermite_rows(std::vector<Vec24> rows) {
    size_t top = 0;
    for (int col = 0; col < 24 && top < rows.size(); ++col) {
        // Euclidean elimination below `top` in this column.
        for (;;) {
            size_t best = top;
            int64_t bestv = 0;
            for (size_t r = top; r < rows.size(); ++r) {
                int64_t v = std::llabs(rows[r][col]);
                if (v != 0 && (bestv == 0 || v < bestv)) {
                    bestv = v;
                    best = r;
                }
            }
            if (bestv == 0) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                int64_t q = rows[r][col] / rows[top][col];
                if (q != 0) rows[r] = vec_sub(rows[r], vec_scale(rows[top], q));
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[top][col] != 0) {
            if (rows[top][col] < 0) rows[top] = vec_scale(rows[top], -1);
            // Reduce the rows above into [0, pivot).
            for (size_t r = 0; r < top; ++r) {
                int64_t q = rows[r][col] >= 0 ? rows[r][col] / rows[top][col]
                                              : -((-rows[r][col] + rows[top][col] - 1) / rows[top][col]);
                if (q != 0) rows[r] = vec_sub(rows[r], vec_scale(rows[top], q));
            }
            ++top;
        }
    }
    rows.resize(top);
    return rows;
}

int first_nonzero(const Vec24& v) {
    for (int i = 0; i < 24; ++i)
        if (v[i] != 0) return i;
    return 24;
}

}  // namespace

GramLattice GramLattice::from_rows(std::vector<Vec24> rows) {
    GramLattice lat;
    lat.basis_ = hermite_rows(std::move(rows));
    const int r = static_cast<int>(lat.basis_.size());
    lat.gram36_.assign(r, std::vector<int64_t>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
            lat.gram36_[i][j] = lat.gram36_[j][i] = scaled_ip(lat.basis_[i], lat.basis_[j]);
    return lat;
}

bool GramLattice::is_integral() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (gram36_[i][j] % 36 != 0) return false;
    return true;
}

bool GramLattice::is_even() const {
    if (!is_integral()) return false;
    for (int i = 0; i < rank(); ++i)
        if ((gram36_[i][i] / 36) % 2 != 0) return false;
    return true;
}

Rat GramLattice::determinant() const {
    // Bareiss fraction-free elimination on the exact scaled Gram.
    const int n = rank();
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = gram36_[i][j];
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return Rat(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Int det36 = a[n - 1][n - 1] * sign;
    Rat d(det36);
    for (int i = 0; i < n; ++i) d /= 36;
    return d;
}

bool GramLattice::contains(const Vec24& v) const {
    Vec24 w = v;
    for (const Vec24& row : basis_) {
        int p = first_nonzero(row);
        if (p == 24) continue;
        if (w[p] % row[p] != 0) continue;  // try later rows only if independent columns
        int64_t q = w[p] / row[p];
        if (q != 0) w = vec_sub(w, vec_scale(row, q));
    }
    for (int i = 0; i < 24; ++i)
        if (w[i] != 0) return false;
    return true;
}

Int GramLattice::index_of_sublattice(const GramLattice& sub) const {
    if (sub.rank() != rank()) throw std::invalid_argument("rank mismatch for index");
    Rat ratio = sub.determinant() / determinant();
    Int n = numerator(ratio), d = denominator(ratio);
    Int sn = isqrt_floor(n), sd = isqrt_floor(d);
    if (sn * sn != n || sd * sd != d)
        throw std::logic_error("index^2 is not a perfect square; not a sublattice pair");
    if (sd != 1) throw std::logic_error("sublattice has smaller determinant");
    return sn;
}

std::vector<Vec24> GramLattice::dual_basis() const {
    // Solve G X = B over Q; scaled dual rows are 36 * gram36^{ -1} * B.
    const int n = rank();
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 24));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(gram36_[i][j], 36);
        for (int c = 0; c < 24; ++c) aug[i][n + c] = Rat(basis_[i][c]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular Gram matrix");
        std::swap(aug[col], aug[piv]);
        Rat p = aug[col][col];
        for (int c = col; c < n + 24; ++c) aug[col][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (int c = col; c < n + 24; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::vector<Vec24> dual(n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 24; ++c) {
            if (!is_integer(aug[i][n + c]))
                throw std::logic_error("dual basis leaves the scaled-integer grid");
            dual[i][c] = static_cast<int64_t>(to_ll(numerator(aug[i][n + c])));
        }
    return dual;
}

// ---------------------------------------------------------------------------
// Builders.

GramLattice build_base(const GlueSpec& spec) {
    std::vector<Vec24> rows;
    for (int b = spec.first_block; b < spec.first_block + spec.nblocks; ++b) {
        Vec24 r1{}, r2{};
        r1[2 * b] = 6;
        r2[2 * b + 1] = 6;
        rows.push_back(r1);
        rows.push_back(r2);
    }
    return GramLattice::from_rows(std::move(rows));
}

namespace {

Vec24 glue_row4(const GlueSpec& spec, const GlueVectorMap& gv, const Codeword& w) {
    Vec24 v{};
    for (int k = 0; k < spec.nblocks; ++k) {
        auto r = gv.rep4_at(spec.first_block + k, w[k]);
        v[2 * (spec.first_block + k)] = r[0];
        v[2 * (spec.first_block + k) + 1] = r[1];
    }
    return v;
}

Vec24 glue_row3(const GlueSpec& spec, const GlueVectorMap& gv, const Codeword& w) {
    Vec24 v{};
    for (int k = 0; k < spec.nblocks; ++k) {
        auto r = gv.rep3_at(spec.first_block + k, w[k]);
        v[2 * (spec.first_block + k)] = r[0];
        v[2 * (spec.first_block + k) + 1] = r[1];
    }
    return v;
}

}  // namespace

GramLattice glue_lattice(const GlueSpec& spec, const GlueVectorMap& gv) {
    GramLattice base = build_base(spec);
    std::vector<Vec24> rows = base.basis();
    if (spec.code4) {
        // The F4-span needs both g and w*g as Z-generators of the glue group.
        for (const auto& g : spec.code4->generator_rows()) {
            rows.push_back(glue_row4(spec, gv, g));
            Codeword wg(g.size());
            for (size_t k = 0; k < g.size(); ++k) wg[k] = (F4(g[k]) * F4::omega()).v;
            rows.push_back(glue_row4(spec, gv, wg));
        }
    }
    if (spec.code3)
        for (const auto& g : spec.code3->generator_rows()) rows.push_back(glue_row3(spec, gv, g));
    GramLattice lat = GramLattice::from_rows(std::move(rows));
    if (lat.rank() != 2 * spec.nblocks)
        throw std::logic_error("glue produced a degenerate lattice");
    if (!lat.is_even())
        throw std::logic_error("glue produced a non-even lattice: calibration failure");
    return lat;
}

GlueSpec leech_spec() {
    return GlueSpec{0, 12, glue_code_C(), glue_code_D()};
}

GlueSpec lc_spec() {
    return GlueSpec{0, 12, glue_code_C(), std::nullopt};
}

GlueSpec k12_spec(int copy) {
    return GlueSpec{copy == 0 ? 0 : 6, 6, hexacode(), std::nullopt};
}

// ---------------------------------------------------------------------------
// Short-vector counting.

namespace {

// Centered residue in (-3, 3] modulo 6.
int64_t center6(int64_t v) {
    int64_t r = ((v % 6) + 6) % 6;
    return r > 3 ? r - 6 : r;
}

// Count of vectors per 3*norm value in the block coset rep + 6 Z^2.
struct BlockTable {
    std::vector<long long> count;  // index: norm3
    long min3 = -1;
};

BlockTable block_table(std::array<int64_t, 2> rep, long bound3) {
    BlockTable t;
    t.count.assign(bound3 + 1, 0);
    const int64_t c1 = center6(rep[0]), c2 = center6(rep[1]);
    // u^2 - uv + v^2 <= 3*bound3 confines coordinates to |.| <= 2 sqrt(bound3).
    const int64_t reach = (2 * to_ll(isqrt_floor(Int(bound3))) + 3) / 6 + 1;
    for (int64_t i = -reach; i <= reach; ++i) {
        for (int64_t j = -reach; j <= reach; ++j) {
            int64_t x1 = c1 + 6 * i, x2 = c2 + 6 * j;
            int64_t sip = block_ip(x1, x2, x1, x2);
            if (sip % 12 != 0) throw std::logic_error("block norm not in (1/3)Z");
            int64_t n3 = sip / 12;
            if (n3 > bound3) continue;
            ++t.count[n3];
            if (t.min3 < 0 || n3 < t.min3) t.min3 = n3;
        }
    }
    return t;
}

}  // namespace

std::map<long, long long> short_vector_counts_glue(const GlueSpec& spec,
                                                   const GlueVectorMap& gv,
                                                   long norm3_bound) {
    const int n = spec.nblocks;
    // Per block and per (F4 symbol, F3 symbol) pair.
    std::vector<std::array<BlockTable, 12>> tbl(n);
    for (int k = 0; k < n; ++k)
        for (uint8_t c = 0; c < 4; ++c)
            for (uint8_t d = 0; d < 3; ++d) {
                auto r4 = gv.rep4_at(spec.first_block + k, c);
                auto r3 = gv.rep3_at(spec.first_block + k, d);
                tbl[k][c * 3 + d] =
                    block_table({r4[0] + r3[0], r4[1] + r3[1]}, norm3_bound);
            }

    std::vector<Codeword> words4 =
        spec.code4 ? spec.code4->enumerate() : std::vector<Codeword>{Codeword(n, 0)};
    std::vector<Codeword> words3 =
        spec.code3 ? spec.code3->enumerate() : std::vector<Codeword>{Codeword(n, 0)};

    std::map<long, long long> counts;
    std::vector<long long> dp(norm3_bound + 1), ndp(norm3_bound + 1);
    std::vector<int> idx(n);
    for (const auto& cw : words4) {
        for (const auto& dw : words3) {
            long minsum = 0;
            bool skip = false;
            for (int k = 0; k < n; ++k) {
                idx[k] = cw[k] * 3 + dw[k];
                minsum += tbl[k][idx[k]].min3;
                if (minsum > norm3_bound) { skip = true; break; }
            }
            if (skip) continue;
            std::fill(dp.begin(), dp.end(), 0);
            dp[0] = 1;
            for (int k = 0; k < n; ++k) {
                const auto& bt = tbl[k][idx[k]];
                std::fill(ndp.begin(), ndp.end(), 0);
                for (long a = 0; a <= norm3_bound; ++a) {
                    if (dp[a] == 0) continue;
                    const long cap = norm3_bound - a;
                    for (long b = bt.min3; b <= cap; ++b)
                        if (bt.count[b] != 0) ndp[a + b] += dp[a] * bt.count[b];
                }
                dp.swap(ndp);
            }
            for (long v = 0; v <= norm3_bound; ++v)
                if (dp[v] != 0) counts[v] += dp[v];
        }
    }
    return counts;
}

std::map<long, long long> short_vector_counts_generic(const GramLattice& lat,
                                                      long norm3_bound) {
    const int n = lat.rank();
    // Exact LDL^T: gram = L^T diag(d) L with unit lower-triangular mirror.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = lat.gram(i, j);
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> L(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        d[i] = a[i][i];
        if (d[i] <= 0) throw std::logic_error("Gram matrix is not positive definite");
        for (int j = i + 1; j < n; ++j) L[i][j] = a[i][j] / d[i];
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c) a[r][c] -= a[r][i] * a[i][c] / d[i];
    }

    const Rat bound(norm3_bound, 3);
    std::map<long, long long> counts;
    std::vector<long long> x(n, 0);
    // Depth-first over coordinates n-1 .. 0 with exact interval bounds.
    auto recurse = [&](auto&& self, int lvl, const Rat& rem) -> void {
        if (lvl < 0) {
            Rat n3 = (bound - rem) * 3;
            if (!is_integer(n3)) throw std::logic_error("vector norm not in (1/3)Z");
            counts[static_cast<long>(to_ll(numerator(n3)))] += 1;
            return;
        }
        Rat c(0);
        for (int j = lvl + 1; j < n; ++j)
            if (x[j] != 0) c += L[lvl][j] * Rat(x[j]);
        const Rat nc = -c;
        const long long base = to_ll(floor_div(numerator(nc), denominator(nc)));
        const long long spread = to_ll(rat_sqrt_floor(rem / d[lvl])) + 1;
        for (long long xi = base - spread; xi <= base + spread + 1; ++xi) {
            Rat t = Rat(xi) + c;
            Rat used = d[lvl] * t * t;
            if (used > rem) continue;
            x[lvl] = xi;
            self(self, lvl - 1, Rat(rem - used));
        }
        x[lvl] = 0;
    };
    recurse(recurse, n - 1, bound);
    return counts;
}

QSeries theta_from_counts(const std::map<long, long long>& counts, const Rat& order) {
    QSeries s = QSeries::zero(QSeries::kDefaultDenomBound, order);
    for (const auto& [n3, c] : counts) s.add_coeff(Rat(n3, 6), Rat(c));
    return s;
}

// ---------------------------------------------------------------------------
// Smith normal form.

SmithResult smith_normal_form(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    SmithResult res;
    res.U.assign(n, std::vector<Int>(n, 0));
    res.Uinv.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) res.U[i][i] = res.Uinv[i][i] = 1;

    auto row_op = [&](int dst, int src, const Int& t) {
        // R_dst += t R_src; Uinv gets the inverse column operation.
        for (int c = 0; c < n; ++c) a[dst][c] += t * a[src][c];
        for (int c = 0; c < n; ++c) res.U[dst][c] += t * res.U[src][c];
        for (int r = 0; r < n; ++r) res.Uinv[r][src] -= t * res.Uinv[r][dst];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(res.U[i], res.U[j]);
        for (int r = 0; r < n; ++r) std::swap(res.Uinv[r][i], res.Uinv[r][j]);
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < n; ++c) a[i][c] = -a[i][c];
        for (int c = 0; c < n; ++c) res.U[i][c] = -res.U[i][c];
        for (int r = 0; r < n; ++r) res.Uinv[r][i] = -res.Uinv[r][i];
    };
    auto col_op = [&](int dst, int src, const Int& t) {
        for (int r = 0; r < n; ++r) a[r][dst] += t * a[r][src];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };

    for (int t = 0; t < n; ++t) {
        bool pivot_done = false;
        while (!pivot_done) {
            // Find a nonzero pivot.
            int pr = -1, pc = -1;
            for (int r = t; r < n && pr < 0; ++r)
                for (int c = t; c < n; ++c)
                    if (a[r][c] != 0) { pr = r; pc = c; break; }
            if (pr < 0) { pivot_done = true; break; }
            row_swap(t, pr);
            col_swap(t, pc);
            for (;;) {
                bool again = false;
                for (int r = t + 1; r < n; ++r) {
                    if (a[r][t] == 0) continue;
                    Int q = a[r][t] / a[t][t];
                    row_op(r, t, -q);
                    if (a[r][t] != 0) {
                        row_swap(t, r);
                        again = true;
                    }
                }
                if (again) continue;
                for (int c = t + 1; c < n; ++c) {
                    if (a[t][c] == 0) continue;
                    Int q = a[t][c] / a[t][t];
                    col_op(c, t, -q);
                    if (a[t][c] != 0) {
                        col_swap(t, c);
                        again = true;
                    }
                }
                if (!again) break;
            }
            if (a[t][t] < 0) row_neg(t);
            // Divisibility: fold a non-multiple into this pivot and redo it.
            pivot_done = true;
            for (int r = t + 1; r < n && pivot_done; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        row_op(t, r, Int(1));
                        pivot_done = false;
                        break;
                    }
        }
        if (a[t][t] == 0) break;
    }
    res.diag.resize(n);
    for (int i = 0; i < n; ++i) res.diag[i] = a[i][i];
    return res;
}

// ---------------------------------------------------------------------------
// K12 discriminant data.

K12Disc::K12Disc(int copy, const GlueVectorMap& gv)
    : copy_(copy), gv_(gv), lat_(glue_lattice(k12_spec(copy), gv)) {
    const int n = lat_.rank();
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (lat_.gram36(i, j) % 36 != 0) throw std::logic_error("K12 gram not integral");
            g[i][j] = lat_.gram36(i, j) / 36;
        }
    SmithResult snf = smith_normal_form(g);
    std::vector<int> gen_pos;
    for (int i = 0; i < n; ++i) {
        if (snf.diag[i] != 1) {
            factors_.push_back(snf.diag[i]);
            gen_pos.push_back(i);
        }
    }
    if (factors_.size() != 6)
        throw std::logic_error("K12 discriminant group is not F3^6");
    for (const Int& f : factors_)
        if (f != 3) throw std::logic_error("K12 invariant factor differs from 3");

    std::vector<Vec24> dual = lat_.dual_basis();
    for (int gi = 0; gi < 6; ++gi) {
        Vec24 v{};
        for (int j = 0; j < n; ++j)
            v = vec_add(v, vec_scale(dual[j], mod3(snf.Uinv[j][gen_pos[gi]])));
        gens_[gi] = v;
    }

    // Label helpers need U restricted to the order-3 factor rows.
    label_rows_.assign(6, std::vector<int>(n));
    for (int gi = 0; gi < 6; ++gi)
        for (int j = 0; j < n; ++j)
            label_rows_[gi][j] = mod3(snf.U[gen_pos[gi]][j]);
    auto label_of = [this](const Vec24& v) { return label_of_dual(v); };

    linear_rep_.resize(kLabels);
    min_rep_.resize(kLabels);
    halfnorm3_.resize(kLabels);
    q_.resize(kLabels);
    for (int lbl = 0; lbl < kLabels; ++lbl) {
        Vec24 v{};
        int t = lbl;
        for (int gi = 0; gi < 6; ++gi) {
            int c = t % 3;
            t /= 3;
            if (c != 0) v = vec_add(v, vec_scale(gens_[gi], c));
        }
        linear_rep_[lbl] = v;
        if (label_of(v) != lbl) throw std::logic_error("label map inconsistency");
    }

    // Minimal representatives via the hexacode coset decomposition:
    // K = union over hexacode words of (glue vector + block lattice), so the
    // coset minimum splits into independent per-block minima.
    const LinearCode hexa = hexacode();
    const auto hexa_words = hexa.enumerate();
    const int fb = copy_ == 0 ? 0 : 6;
    for (int lbl = 0; lbl < kLabels; ++lbl) {
        const Vec24& x = linear_rep_[lbl];
        int64_t best = -1;
        Vec24 best_vec{};
        for (const auto& hw : hexa_words) {
            int64_t total = 0;
            Vec24 cand{};
            for (int k = 0; k < 6; ++k) {
                auto r4 = gv.rep4_at(fb + k, hw[k]);
                int64_t x1 = center6(x[2 * (fb + k)] + r4[0]);
                int64_t x2 = center6(x[2 * (fb + k) + 1] + r4[1]);
                int64_t bmin = -1, b1 = 0, b2 = 0;
                for (int64_t i = -1; i <= 1; ++i)
                    for (int64_t j = -1; j <= 1; ++j) {
                        int64_t y1 = x1 + 6 * i, y2 = x2 + 6 * j;
                        int64_t s = block_ip(y1, y2, y1, y2);
                        if (bmin < 0 || s < bmin) {
                            bmin = s;
                            b1 = y1;
                            b2 = y2;
                        }
                    }
                total += bmin;
                cand[2 * (fb + k)] = b1;
                cand[2 * (fb + k) + 1] = b2;
            }
            if (best < 0 || total < best) {
                best = total;
                best_vec = cand;
            }
        }
        if (best % 24 != 0) throw std::logic_error("coset minimum not in (2/3)Z");
        min_rep_[lbl] = best_vec;
        halfnorm3_[lbl] = static_cast<long>(best / 24);
        q_[lbl] = f3_of(2 * halfnorm3_[lbl]);
        if (label_of(best_vec) != lbl) throw std::logic_error("minimal representative label drift");
    }

    // Bilinear pairing table from fixed linear representatives.
    int P[6][6];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int64_t sip = scaled_ip(gens_[i], gens_[j]);
            if (sip % 12 != 0) throw std::logic_error("generator pairing not in (1/3)Z");
            P[i][j] = static_cast<int>(((sip / 12) % 3 + 3) % 3);
        }
    pair_.assign(kLabels * kLabels, 0);
    for (int a = 0; a < kLabels; ++a) {
        int ad[6], t = a;
        for (int i = 0; i < 6; ++i) { ad[i] = t % 3; t /= 3; }
        int row[6];
        for (int j = 0; j < 6; ++j) {
            int s = 0;
            for (int i = 0; i < 6; ++i) s += ad[i] * P[i][j];
            row[j] = s % 3;
        }
        for (int b = 0; b < kLabels; ++b) {
            int bd = b, s = 0;
            for (int j = 0; j < 6; ++j) {
                s += row[j] * (bd % 3);
                bd /= 3;
            }
            pair_[a * kLabels + b] = static_cast<uint8_t>(s % 3);
        }
    }
}

std::map<long, long long> K12Disc::coset_vector_counts(int label, long bound3) const {
    const int fb = copy_ == 0 ? 0 : 6;
    const Vec24& x = linear_rep_[label];
    static const auto hexa_words = hexacode().enumerate();
    std::map<long, long long> counts;
    std::vector<long long> dp(bound3 + 1), ndp(bound3 + 1);
    for (const auto& hw : hexa_words) {
        std::fill(dp.begin(), dp.end(), 0);
        dp[0] = 1;
        bool dead = false;
        for (int k = 0; k < 6 && !dead; ++k) {
            auto r4 = gv_.rep4_at(fb + k, hw[k]);
            BlockTable bt = block_table(
                {x[2 * (fb + k)] + r4[0], x[2 * (fb + k) + 1] + r4[1]}, bound3);
            std::fill(ndp.begin(), ndp.end(), 0);
            bool any = false;
            for (long a = 0; a <= bound3; ++a) {
                if (dp[a] == 0) continue;
                for (long b = bt.min3 < 0 ? bound3 + 1 : bt.min3; b <= bound3 - a; ++b)
                    if (bt.count[b] != 0) {
                        ndp[a + b] += dp[a] * bt.count[b];
                        any = true;
                    }
            }
            dead = !any;
            dp.swap(ndp);
        }
        if (dead) continue;
        for (long v = 0; v <= bound3; ++v)
            if (dp[v] != 0) counts[v] += dp[v];
    }
    return counts;
}

int K12Disc::label_of_dual(const Vec24& v) const {
    const int n = lat_.rank();
    std::array<long long, 12> y{};
    for (int j = 0; j < n; ++j) {
        int64_t sip = scaled_ip(v, lat_.basis()[j]);
        if (sip % 36 != 0) throw std::logic_error("vector outside the dual lattice");
        y[j] = sip / 36;
    }
    int lbl = 0, p3 = 1;
    for (int gi = 0; gi < 6; ++gi) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += label_rows_[gi][j] * (y[j] % 3);
        lbl += static_cast<int>(((acc % 3) + 3) % 3) * p3;
        p3 *= 3;
    }
    return lbl;
}

// ---------------------------------------------------------------------------
// Isometries.

Vec24 Isometry::apply(const Vec24& v) const {
    Vec24 r{};
    for (int i = 0; i < 24; ++i) {
        int64_t s = 0;
        for (int j = 0; j < 24; ++j) s += static_cast<int64_t>(mat[i][j]) * v[j];
        r[i] = s;
    }
    return r;
}

Isometry Isometry::compose(const Isometry& inner) const {
    Isometry r;
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            int s = 0;
            for (int k = 0; k < 24; ++k) s += mat[i][k] * inner.mat[k][j];
            r.mat[i][j] = s;
        }
    return r;
}

bool Isometry::preserves_form() const {
    // Columns are images of basis vectors; check all pairwise inner products.
    for (int i = 0; i < 24; ++i) {
        Vec24 ei{};
        ei[i] = 6;
        Vec24 ui = apply(ei);
        for (int j = i; j < 24; ++j) {
            Vec24 ej{};
            ej[j] = 6;
            Vec24 uj = apply(ej);
            if (scaled_ip(ui, uj) != scaled_ip(ei, ej)) return false;
        }
    }
    return true;
}

bool Isometry::preserves_lattice(const GramLattice& lat) const {
    std::vector<Vec24> img;
    img.reserve(lat.basis().size());
    for (const Vec24& b : lat.basis()) {
        Vec24 ib = apply(b);
        if (!lat.contains(ib)) return false;
        img.push_back(ib);
    }
    return GramLattice::from_rows(std::move(img)).equals(lat);
}

bool Isometry::is_identity() const {
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j)
            if (mat[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Isometry Isometry::identity() {
    Isometry r;
    for (int i = 0; i < 24; ++i) r.mat[i][i] = 1;
    return r;
}

Isometry Isometry::negation() {
    Isometry r;
    for (int i = 0; i < 24; ++i) r.mat[i][i] = -1;
    return r;
}

Isometry build_tau() {
    // Per block: e1 -> e2, e2 -> -e1 - e2, i.e. coordinates (a,b) -> (-b, a-b).
    Isometry t;
    for (int b = 0; b < 12; ++b) {
        t.mat[2 * b][2 * b + 1] = -1;
        t.mat[2 * b + 1][2 * b] = 1;
        t.mat[2 * b + 1][2 * b + 1] = -1;
    }
    return t;
}

Isometry build_h() {
    Isometry h;
    for (int b = 0; b < 6; ++b) {
        for (int c = 0; c < 2; ++c) {
            h.mat[2 * b + c][2 * (b + 6) + c] = 1;       // first half reads the second
            h.mat[2 * (b + 6) + c][2 * b + c] = -1;      // second half reads minus the first
        }
    }
    return h;
}

bool tau_trivial_on_discriminant(const K12Disc& disc, const Isometry& tau) {
    for (const Vec24& g : disc.generators()) {
        Vec24 moved = vec_sub(g, tau.apply(g));
        if (!disc.lattice().contains(moved)) return false;
    }
    return true;
}

}  // namespace z3orb
