#pragma once

#include <cstdint>

namespace z3orb {

// Arithmetic in F3 with elements {0,1,2}.
using F3 = uint8_t;

inline F3 f3_add(F3 a, F3 b) { return static_cast<F3>((a + b) % 3); }
inline F3 f3_sub(F3 a, F3 b) { return static_cast<F3>((a + 3 - b) % 3); }
inline F3 f3_neg(F3 a) { return static_cast<F3>((3 - a) % 3); }
inline F3 f3_mul(F3 a, F3 b) { return static_cast<F3>((a * b) % 3); }
// Inverse on F3* (1 and 2 are self-inverse).
inline F3 f3_inv(F3 a) { return a; }
inline F3 f3_of(long v) { long m = v % 3; return static_cast<F3>(m < 0 ? m + 3 : m); }

}  // namespace z3orb
