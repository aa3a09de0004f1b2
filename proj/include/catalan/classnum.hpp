#pragma once

#include "catalan/cyclotomic.hpp"

namespace catalan {

// Smallest primitive root mod p (order verified against the factorization of p-1).
unsigned primitive_root(unsigned p);

// F_p(X) = sum_{i=1}^{p-1} c_i X^i with c_i the representative of gamma^i in [1, p-1].
IntPoly fp_polynomial(unsigned p);

// h_p^- = |prod_{k=1}^{(p-1)/2} F_p(zeta_{p-1}^{2k-1})| / (2p)^{(p-3)/2},
// computed exactly in Z[zeta_{p-1}].
Int h_minus(unsigned p);

}  // namespace catalan
