#pragma once

#include <vector>

#include "catalan/cyclotomic.hpp"

namespace catalan {

// Element of Q[(Z/mZ)^*], dense over the sorted units mod m.
class GroupRingElt {
 public:
  explicit GroupRingElt(unsigned m);
  static GroupRingElt sigma(unsigned m, long t);

  unsigned modulus() const { return m_; }
  const std::vector<unsigned>& units() const { return units_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat& at(long t);              // coefficient of sigma_t, t a unit mod m
  const Rat& at(long t) const;

  bool is_zero() const;
  bool is_integral() const;
  Rat coeff_sum() const;
  Rat norm1() const;  // sum of |coefficients|

  GroupRingElt operator+(const GroupRingElt& o) const;
  GroupRingElt operator-(const GroupRingElt& o) const;
  GroupRingElt operator-() const;
  GroupRingElt operator*(const Rat& r) const;
  bool operator==(const GroupRingElt& o) const;
  bool operator!=(const GroupRingElt& o) const { return !(*this == o); }

 private:
  unsigned m_;
  std::vector<unsigned> units_;
  std::vector<Rat> c_;
};

// Convolution product: coefficient of sigma_u is sum over st = u of a_s b_t.
GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);

// Theta = sum over units t of (t/m) sigma_t^{-1}; m >= 3.
GroupRingElt theta(unsigned m);

// Theta_b = -sum over units t of [bt/m] sigma_t^{-1}; equals (sigma_b - b) Theta.
GroupRingElt theta_b(unsigned m, long b);

struct StickelbergerBasis {
  std::vector<GroupRingElt> f;  // f_1 .. f_{p-1}
  std::vector<GroupRingElt> e;  // e_1 .. e_{(p-1)/2}
  GroupRingElt sG;
};

StickelbergerBasis stickelberger_basis(unsigned p);

// Rank over Q of the span, by fraction-free (Bareiss) elimination.
unsigned lattice_rank(const std::vector<GroupRingElt>& basis);

// x^theta = prod sigma_t(x)^{a_t}; requires integral coefficients >= 0 and
// theta.modulus() == x.order().
CycRat act(const GroupRingElt& theta, const CycRat& x);

// Whether x^n - 1 is squarefree over F_q (gcd with its derivative constant).
bool semisimple_check(unsigned long q, unsigned n);

struct SeriesReport {
  unsigned p = 0, q = 0, K = 0;
  std::vector<CycRat> coeffs;  // F(T) truncated, order-p rational coefficients
  std::vector<CycRat> a;       // a_k = coeffs[k] * k! * q^k
  bool integrality_pass = false;
  bool congruence_pass = false;
  bool pass() const { return integrality_pass && congruence_pass; }
};

// Truncation of F(T) = prod over units t of (1 - zeta_p^t T)^{n_t/q} with the
// Proposition-3 checks: a_k is integral and a_k == (-sum n_t zeta_p^t)^k
// mod q Z[zeta_p].
SeriesReport mihailescu_series(unsigned p, unsigned q, const GroupRingElt& th,
                               unsigned K);

}  // namespace catalan
