#pragma once

#include <memory>
#include <vector>

#include "catalan/cyclotomic.hpp"

namespace catalan {

// Explicit F_{p^f}. Elements are identified by their index sum c_i p^i where
// (c_0, ..., c_{f-1}) are the coordinates in the power basis of the modulus
// root. Exp/log tables for the deterministic generator are built up front.
class FqField {
 public:
  static std::shared_ptr<const FqField> build(unsigned p, unsigned f);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  // Non-leading coefficients of the monic modulus, length f.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  unsigned generator() const { return gen_; }

  std::vector<unsigned> decode(unsigned idx) const;
  unsigned encode(const std::vector<unsigned>& v) const;

  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned pow(unsigned a, unsigned long e) const;
  unsigned exp(unsigned long k) const { return exp_[k % (q_ - 1)]; }  // g^k
  unsigned log(unsigned a) const;      // throws on 0
  unsigned mult_order(unsigned a) const;

  unsigned trace(unsigned a) const;    // in [0, p)

 private:
  FqField() = default;
  unsigned p_ = 0, f_ = 0, q_ = 0, gen_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> exp_, log_;
  std::vector<unsigned> trace_;
};

using FieldPtr = std::shared_ptr<const FqField>;

struct FqElt {
  FieldPtr field;
  unsigned idx = 0;
};

// Multiplicative character chi with chi(g) = zeta_{q-1}^d.
struct MultCharacter {
  FieldPtr field;
  unsigned d = 0;

  unsigned order() const;
  bool is_trivial() const { return d == 0; }
  MultCharacter inverse_char() const;
  MultCharacter operator*(const MultCharacter& o) const;
  // chi(-1) as +1/-1.
  int sign_at_minus_one() const;
};

// chi(x) as a CycRat of order q-1 (chi(0) = 0 for chi != 1, 1 for chi = 1).
CycRat char_eval(const MultCharacter& chi, const FqElt& x);

unsigned trace(const FqElt& x);
unsigned discrete_log(const FqElt& x);
// Tr(x), the exponent of zeta_p in psi(x).
unsigned additive_char_exponent(const FqElt& x);

}  // namespace catalan
