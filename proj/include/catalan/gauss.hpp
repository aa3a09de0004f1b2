#pragma once

#include <string>

#include "catalan/finitefield.hpp"

namespace catalan {

struct IdentityReport {
  std::string identity;
  std::string parameters;
  bool pass = false;
  std::string lhs, rhs;
};

// G(chi) = -sum_{t in F^*} chi(t) psi(t), as a CycRat of order (q-1)*p.
CycRat gauss_sum(const FieldPtr& field, const MultCharacter& chi);

// J(chi1, chi2) = -sum_{t in F} chi1(t) chi2(1-t), order q-1.
CycRat jacobi_sum(const FieldPtr& field, const MultCharacter& chi1,
                  const MultCharacter& chi2);

// conj(G(chi)) = chi(-1) G(chi^{-1}); requires chi != 1.
IdentityReport gauss_conjugate_check(const FieldPtr& field, const MultCharacter& chi);

// G(chi)^m computed two ways (direct power + down-embedding, and the
// Jacobi-product formula), asserted equal; returns the Q(zeta_m) value.
CycRat gauss_power_in_subfield(const FieldPtr& field, const MultCharacter& chi);

// m-th power residue symbol at x, a CycRat of order m (root of unity, or 0).
CycRat residue_symbol(const FieldPtr& field, const FqElt& x, unsigned m);

// The m roots of unity g^{k(q-1)/m} are pairwise distinct in F_q.
IdentityReport root_of_unity_injectivity_check(const FieldPtr& field, unsigned m);

}  // namespace catalan
