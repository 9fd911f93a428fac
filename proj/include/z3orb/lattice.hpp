#pragma once

#include "z3orb/codes.hpp"
#include "z3orb/f3.hpp"
#include "z3orb/qseries.hpp"
#include "z3orb/rat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace z3orb {

// Ambient space: twelve orthogonal rank-2 blocks, each carrying the doubled
// hexagonal form [[4,-2],[-2,4]].  Every lattice vector in scope has
// coordinates in (1/6)Z, so vectors are stored as integers scaled by 6;
// scaled_ip returns 36 times the true inner product.
using Vec24 = std::array<int64_t, 24>;

int64_t scaled_ip(const Vec24& u, const Vec24& v);
inline int64_t scaled_norm(const Vec24& v) { return scaled_ip(v, v); }

Vec24 vec_add(const Vec24& a, const Vec24& b);
Vec24 vec_sub(const Vec24& a, const Vec24& b);
Vec24 vec_scale(const Vec24& a, int64_t c);

// Coset representatives gluing code symbols onto one block, in scaled
// coordinates.  rep4 realizes (1/2)M / M as F4 so that the block rotation
// cyclically permutes the nonzero symbols like multiplication by w; rep3
// realizes 2M*/M, fixed by the rotation.  frobenius_mask flips the w/W
// labeling on selected blocks (calibration hook for the glue construction).
struct GlueVectorMap {
    std::array<std::array<int64_t, 2>, 4> rep4;
    std::array<std::array<int64_t, 2>, 3> rep3;
    uint16_t frobenius_mask = 0;

    static GlueVectorMap standard();
    std::array<int64_t, 2> rep4_at(int block, uint8_t sym) const;
    std::array<int64_t, 2> rep3_at(int block, uint8_t sym) const;
};

// Which blocks a lattice occupies and which codes glue them.
struct GlueSpec {
    int first_block = 0;
    int nblocks = 12;
    std::optional<LinearCode> code4;  // over F4, length nblocks
    std::optional<LinearCode> code3;  // over F3, length nblocks
};

// Exact lattice with an HNF-canonical basis of scaled coordinate rows.
class GramLattice {
  public:
    static GramLattice from_rows(std::vector<Vec24> rows);

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec24>& basis() const { return basis_; }

    // 36 * <b_i | b_j>
    int64_t gram36(int i, int j) const { return gram36_[i][j]; }
    Rat gram(int i, int j) const { return Rat(gram36_[i][j], 36); }

    bool is_integral() const;
    bool is_even() const;

    // Determinant of the Gram matrix, exact.
    Rat determinant() const;

    bool contains(const Vec24& v) const;
    bool equals(const GramLattice& o) const { return basis_ == o.basis_; }

    // [this : sub] for a finite-index sublattice of the same rank.
    Int index_of_sublattice(const GramLattice& sub) const;

    // Dual basis of a rank-r lattice, scaled coordinates (throws if the dual
    // leaves the (1/6)Z grid).
    std::vector<Vec24> dual_basis() const;

  private:
    std::vector<Vec24> basis_;
    std::vector<std::vector<int64_t>> gram36_;
};

// Builders for the lattices in scope.
GramLattice build_base(const GlueSpec& spec = {});            // sqrt2 A2 blocks only
GramLattice glue_lattice(const GlueSpec& spec, const GlueVectorMap& gv);
GlueSpec leech_spec();
GlueSpec lc_spec();                    // glue by C alone: two orthogonal K12 copies
GlueSpec k12_spec(int copy);           // one K12 copy on blocks 0..5 or 6..11

// Short vectors.  Norms are returned as 3*|v|^2 (always integral in scope).
// The glue-aware counter walks codeword pairs with per-block norm tables;
// the generic counter enumerates through an exact LDL^T decomposition.
std::map<long, long long> short_vector_counts_glue(const GlueSpec& spec,
                                                   const GlueVectorMap& gv,
                                                   long norm3_bound);
std::map<long, long long> short_vector_counts_generic(const GramLattice& lat,
                                                      long norm3_bound);

// Theta series with exponent |v|^2 / 2 from a norm3 -> count table.
QSeries theta_from_counts(const std::map<long, long long>& counts, const Rat& order);

// Smith normal form of an integer matrix; returns diag entries and the
// unimodular row transform U with S = U * A * V.
struct SmithResult {
    std::vector<Int> diag;
    std::vector<std::vector<Int>> U;
    std::vector<std::vector<Int>> Uinv;
};
SmithResult smith_normal_form(std::vector<std::vector<Int>> a);

// Discriminant group data for one K12 copy: 729 cosets of the dual modulo
// the lattice with exact minimal-norm representatives.
class K12Disc {
  public:
    explicit K12Disc(int copy, const GlueVectorMap& gv);

    const GramLattice& lattice() const { return lat_; }
    int copy() const { return copy_; }

    // Nontrivial invariant factors (all equal 3 for K12).
    const std::vector<Int>& invariant_factors() const { return factors_; }

    // Labels are base-3 encodings of F3^6, 0..728.
    static constexpr int kLabels = 729;
    int label_of_dual(const Vec24& v) const;
    const Vec24& linear_rep(int label) const { return linear_rep_[label]; }
    const Vec24& min_rep(int label) const { return min_rep_[label]; }

    // 3|a|^2/2 of the minimal representative (exact integer).
    long halfnorm3(int label) const { return halfnorm3_[label]; }
    Rat min_norm(int label) const { return Rat(2 * halfnorm3_[label], 3); }
    // q_{K12}(a) = 3|a|^2 mod 3.
    F3 q_disc(int label) const { return q_[label]; }
    // 3<a|b> mod 3 from fixed linear representatives.
    F3 pairing3(int a, int b) const { return pair_[a * kLabels + b]; }

    const std::array<Vec24, 6>& generators() const { return gens_; }

    // Vectors of the coset per 3*norm value up to the bound, by per-block
    // convolution over the hexacode decomposition.
    std::map<long, long long> coset_vector_counts(int label, long bound3) const;

  private:
    int copy_;
    GlueVectorMap gv_;
    GramLattice lat_;
    std::vector<Int> factors_;
    std::array<Vec24, 6> gens_;
    std::vector<std::vector<int>> label_rows_;  // U rows of the order-3 factors
    std::vector<Vec24> linear_rep_;
    std::vector<Vec24> min_rep_;
    std::vector<long> halfnorm3_;
    std::vector<F3> q_;
    std::vector<uint8_t> pair_;
};

// Ambient isometries as integer matrices on scaled coordinates.
struct Isometry {
    std::array<std::array<int, 24>, 24> mat{};

    Vec24 apply(const Vec24& v) const;
    Isometry compose(const Isometry& inner) const;  // this after inner
    bool preserves_form() const;                    // U G U^T = G
    bool preserves_lattice(const GramLattice& lat) const;
    bool is_identity() const;

    static Isometry identity();
    static Isometry negation();
};

Isometry build_tau();  // order-3 block rotation, fixed-point free
Isometry build_h();    // half swap with negation on the second half

// (1 - tau) K* subset of K, tested on the discriminant generators.
bool tau_trivial_on_discriminant(const K12Disc& disc, const Isometry& tau);

}  // namespace z3orb
