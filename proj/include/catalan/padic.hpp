#pragma once

#include <memory>
#include <mutex>

#include "catalan/finitefield.hpp"
#include "catalan/gauss.hpp"

namespace catalan {

// Scalar Hensel lift: refine a simple root of poly mod l to a root mod
// l^target_K. Throws std::domain_error if poly'(root0) = 0 mod l.
Int hensel_lift(const IntPoly& poly, const Int& root0, unsigned long l,
                unsigned target_K);

// A prime of Z[zeta_m] above a rational prime l with l coprime to m,
// represented by a Hensel-lifted root of Phi_m in the unramified extension
// Z_{l^f}, realized as (Z/l^K)[x]/(M(x)) for the deterministic field modulus.
//
// Precision grows monotonically on demand (internally synchronized).
class PrimeIdeal {
 public:
  static std::shared_ptr<PrimeIdeal> above(unsigned long l, unsigned m,
                                           unsigned selector = 1);

  unsigned long l() const { return l_; }
  unsigned m() const { return m_; }
  unsigned f() const { return f_; }
  const FieldPtr& residue_field() const { return field_; }

  // v_P(alpha) for alpha in Q(zeta_m); kInfiniteValuation for 0. Negative for
  // non-integral elements with l in the denominator.
  long valuation(const CycRat& alpha);

  // Force the working precision up to at least K (answers never change).
  void raise_precision(unsigned K);

 private:
  PrimeIdeal() = default;
  void ensure_precision(unsigned K);

  unsigned long l_ = 0;
  unsigned m_ = 0, f_ = 0;
  FieldPtr field_;
  // state at current precision: root coefficients mod l^K
  unsigned K_ = 0;
  Int lK_;
  std::vector<Int> root_;
  std::mutex mu_;
};

using PrimeIdealPtr = std::shared_ptr<PrimeIdeal>;

// Totally ramified layer: valuations in Z[zeta_{p*m}] at the unique prime
// above a chosen prime of Z[zeta_m] over p, with uniformizer pi = zeta_p - 1
// and e = p - 1.
class RamifiedContext {
 public:
  RamifiedContext(unsigned p, unsigned m, PrimeIdealPtr base);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned order() const { return n_; }
  PrimeIdeal& base() const { return *base_; }

  // alpha = sum_k c_k pi^k with c_k in Q(zeta_m); round-trips exactly.
  std::vector<CycRat> pi_expand(const CycRat& alpha) const;

  // v_P(alpha) = min_k (k + (p-1) v_base(c_k)); kInfiniteValuation for 0.
  long valuation(const CycRat& alpha) const;

 private:
  unsigned p_, m_, n_;
  PrimeIdealPtr base_;
  // inverse of the basis matrix (pi^k zeta_m^i) -> power basis of zeta_n;
  // unimodular, so entries are integers.
  std::vector<std::vector<Rat>> inv_;
};

struct DigitProfile {
  long a = 0;
  unsigned p = 0, f = 0;
  std::vector<unsigned> digits;  // base-p digits of a mod (q-1), length f
  unsigned s = 0;                // digit sum
  Int gamma;                     // product of digit factorials
};

// Digits of a (period q-1 extension), s(a), gamma(a); verifies the
// fractional-part identity s(a) = (p-1) sum_i <p^i a / (q-1)>.
DigitProfile digit_profile(long a, unsigned p, unsigned f);

struct CongruenceReport {
  unsigned p = 0, f = 0;
  long a = 0;
  unsigned s = 0;
  long v_gauss = 0;      // v_P(G(omega^a))
  long v_delta = 0;      // v_P(gamma(a) G(omega^a) - pi^{s(a)}), kInfinite if 0
  bool eq6_pass = false;       // v_gauss == s(a)
  bool congruence_pass = false;  // v_delta >= s(a) + 1
  bool pass() const { return eq6_pass && congruence_pass; }
};

// The Stickelberger congruence G(omega^a)/pi^{s(a)} == 1/gamma(a) mod P,
// together with v_P(G(omega^a)) = s(a).
CongruenceReport stickelberger_congruence_check(unsigned p, unsigned f, long a);

struct RelationReport {
  unsigned p = 0, f = 0, m = 0;
  bool valuations_pass = false;  // r_t formula at every prime above p
  bool norm_pass = false;        // total valuation budget from the norm
  bool pass() const { return valuations_pass && norm_pass; }
};

// Lemma-5 valuations of G(chi)^m in Z[zeta_m], chi = omega^{(q-1)/m}:
// v at the prime selected by t equals (m/(p-1)) s(t(q-1)/m), and the
// sum over all t of r_t equals v_p(N(G(chi)^m)).
RelationReport stickelberger_relation_check(unsigned p, unsigned f, unsigned m);

}  // namespace catalan
