#pragma once

#include "z3orb/f3.hpp"
#include "z3orb/f4.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace z3orb {

// Linear code over F3 or F4 given by a generator matrix with independent
// rows.  Codewords are enumerated lexicographically by message vector; both
// fields share the uint8_t symbol encoding (F3: 0,1,2; F4: 0,1,w=2,W=3).
enum class CodeField { F3, F4 };

using Codeword = std::vector<uint8_t>;

class LinearCode {
  public:
    LinearCode(CodeField field, std::vector<Codeword> generator_rows);

    CodeField field() const { return field_; }
    size_t length() const { return length_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<Codeword>& generator_rows() const { return rows_; }

    size_t size() const;  // |field|^rank

    // Complete codeword list, deterministic order.  Cap guards against
    // accidental enumeration of huge codes.
    std::vector<Codeword> enumerate(size_t cap = 10'000'000) const;

    std::map<int, long long> weight_distribution() const;
    int minimum_nonzero_weight() const;

    bool contains(const Codeword& w) const;

    // Self-orthogonality under the standard inner product (F3) or the
    // Hermitian form sum u_i conj(v_i) (F4), checked on generator pairs.
    bool is_self_orthogonal() const;

    std::string to_text() const;
    static LinearCode from_text(const std::string& text);

  private:
    CodeField field_;
    size_t length_;
    std::vector<Codeword> rows_;
};

// Coordinate permutation combined with a per-coordinate scalar (F3: +-1)
// or Frobenius flag (F4).  position i of the image takes its symbol from
// position perm[i] of the argument.
struct MonomialMap {
    std::vector<int> perm;
    std::vector<uint8_t> twist;  // F3: 0 -> +1, 1 -> -1;  F4: 0 -> id, 1 -> Frobenius

    static MonomialMap identity(size_t n);
    MonomialMap compose(const MonomialMap& inner) const;  // this after inner
    bool is_involution() const;

    Codeword apply(CodeField field, const Codeword& w) const;
};

LinearCode apply_map(const LinearCode& code, const MonomialMap& m);
bool is_invariant(const LinearCode& code, const MonomialMap& m);

// The specific codes of the glue construction.
LinearCode tetracode();                 // [4,2,3] self-dual over F3
LinearCode hexacode();                  // [6,3,4] Hermitian self-dual over F4
LinearCode glue_code_D();               // [12,6] over F3, three tetracode blocks
LinearCode glue_code_C();               // hexacode plus hexacode on 12 coordinates

// The coordinate map h' = eps compose s: swap the two halves and negate
// coordinates 7..12.  Over the quaternary labels negation acts trivially,
// so the same map on C is the bare half swap.
MonomialMap half_swap_negate();
MonomialMap half_swap();

}  // namespace z3orb
