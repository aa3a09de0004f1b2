#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace catalan {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for v(0) in the various valuation routines.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);
std::vector<unsigned> prime_factors(unsigned n);
// Units of Z/mZ in increasing order. For m = 1 this is {0} (trivial group).
std::vector<unsigned> units_mod(unsigned m);
long inv_mod(long a, long m);
long pow_mod(long b, long e, long m);
bool is_prime(unsigned long n);

// Dense integer polynomial, c[i] is the coefficient of x^i.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Int eval(const Int& x) const;
  IntPoly derivative() const;
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

// Phi_n, monic of degree phi(n). Cached; thread-safe.
const IntPoly& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_n), canonically reduced mod Phi_n.
// coeffs()[i] is the coefficient of zeta_n^i, 0 <= i < phi(n).
class CycRat {
 public:
  CycRat() : order_(1), c_(1, Rat(0)) {}
  CycRat(unsigned order, std::vector<Rat> poly);  // reduces mod Phi_order

  static CycRat zero(unsigned n);
  static CycRat one(unsigned n);
  static CycRat from_rational(const Rat& r, unsigned n);
  static CycRat root_of_unity(unsigned n, long k);  // zeta_n^k

  unsigned order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()
  bool is_integral() const;    // all denominators 1

  CycRat operator+(const CycRat& o) const;
  CycRat operator-(const CycRat& o) const;
  CycRat operator-() const;
  CycRat operator*(const CycRat& o) const;
  CycRat operator*(const Rat& r) const;
  bool operator==(const CycRat& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const CycRat& o) const { return !(*this == o); }

  CycRat inverse() const;  // extended gcd with Phi_n; throws on zero
  CycRat pow(unsigned long e) const;

  // sigma_t with zeta_n -> zeta_n^t; requires gcd(t, n) = 1.
  CycRat galois(long t) const;
  CycRat conj() const { return galois(-1); }

  Rat norm() const;  // product over all sigma_t

  // Up-embedding when order | new_order, down-embedding when new_order | order
  // (membership-checked; throws std::domain_error if not in the subfield).
  CycRat embed(unsigned new_order) const;

 private:
  unsigned order_;
  std::vector<Rat> c_;  // size phi(order_)
};

// xi_a = zeta_p^{(1-a)/2 mod p} * (zeta_p^a - 1)/(zeta_p - 1), a real unit of Z[zeta_p].
CycRat cyclotomic_unit_xi(unsigned p, unsigned a);

// Sum over nontrivial p-th roots of unity of zeta/(1-zeta)^2; verifies the
// result is rational and returns it (equals (1-p^2)/12).
Rat kummer_sum_identity(unsigned p);

}  // namespace catalan
