#pragma once

#include <cstdint>
#include <vector>

#include "catalan/gauss.hpp"

namespace catalan {

// Fast exact checker for the Gauss/Jacobi identity suite over one field.
//
// Character sums over F_q live in Z[zeta_{q-1}, zeta_p]. Both sides of an
// identity are accumulated as sparse monomial lists (exponent pairs with
// +-1 weights), multiplied term-by-term into a dense (q-1) x p integer grid,
// and the difference is canonicalized by folding zeta_p^{p-1} and reducing
// each zeta_p-column mod Phi_{q-1}. All arithmetic is exact (64-bit with
// overflow detection; values stay tiny in practice).
class GaussSumChecker {
 public:
  explicit GaussSumChecker(FieldPtr field);

  // |G(chi)|^2 = q for the character with exponent d != 0.
  bool check_modulus_squared(unsigned d) const;
  // conj(G(chi)) = chi(-1) G(chi^{-1}).
  bool check_conjugation(unsigned d) const;
  // G(chi1) G(chi2) = G(chi1 chi2) J(chi1, chi2), all three nontrivial.
  bool check_factorization(unsigned d1, unsigned d2) const;
  // G(omega^{bp}) = G(omega^b).
  bool check_frobenius_shift(unsigned b) const;

  // Runs the whole suite for this field; returns per-identity reports.
  std::vector<IdentityReport> run_suite() const;

 private:
  struct Term {
    unsigned er;  // exponent of zeta_{q-1}
    unsigned ep;  // exponent of zeta_p
    int w;        // +-1 weight
  };
  using Terms = std::vector<Term>;

  Terms gauss_terms(unsigned d) const;            // G(chi_d)
  Terms conj_terms(const Terms& t) const;         // sigma_{-1} on both roots
  Terms jacobi_terms(unsigned d1, unsigned d2) const;
  void accumulate_product(std::vector<int64_t>& grid, const Terms& a,
                          const Terms& b, int sign) const;
  void accumulate(std::vector<int64_t>& grid, const Terms& a, int sign) const;
  bool grid_is_zero(std::vector<int64_t> grid) const;

  FieldPtr field_;
  unsigned p_, r_;                // r = q-1
  std::vector<int64_t> phi_r_;    // Phi_{q-1} coefficients
};

}  // namespace catalan
