#include "catalan/classnum.hpp"

#include <stdexcept>

namespace catalan {

unsigned primitive_root(unsigned p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("need an odd prime");
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned r : prime_factors(p - 1))
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

IntPoly fp_polynomial(unsigned p) {
  unsigned g = primitive_root(p);
  std::vector<Int> c(p, Int(0));
  unsigned long gi = 1;
  for (unsigned i = 1; i < p; ++i) {
    gi = gi * g % p;
    c[i] = gi == 0 ? p : gi;  // representative in [1, p-1]; gi never 0 here
  }
  return IntPoly(std::move(c));
}

namespace {

// F_p(zeta_{p-1}^e): accumulate exponents mod p-1, reduce once.
CycRat eval_at_root(const IntPoly& F, unsigned p, unsigned e) {
  unsigned n = p - 1;
  std::vector<Rat> acc(n, Rat(0));
  for (unsigned i = 1; i < p; ++i)
    acc[static_cast<unsigned long>(e) * i % n] += Rat(F.c[i]);
  return CycRat(n, std::move(acc));
}

CycRat balanced_product(std::vector<CycRat>& v, size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  size_t mid = lo + (hi - lo) / 2;
  return balanced_product(v, lo, mid) * balanced_product(v, mid, hi);
}

}  // namespace

Int h_minus(unsigned p) {
  IntPoly F = fp_polynomial(p);
  std::vector<CycRat> vals;
  for (unsigned k = 1; k <= (p - 1) / 2; ++k)
    vals.push_back(eval_at_root(F, p, (2 * k - 1) % (p - 1)));
  CycRat prod = balanced_product(vals, 0, vals.size());
  if (!prod.is_rational())
    throw std::logic_error("product is not a rational integer");
  Rat v = prod.rational_value();
  if (v.get_den() != 1) throw std::logic_error("product is not integral");
  Int num = abs(v.get_num());
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2ul * p, (p - 3) / 2);
  Int h, rem;
  mpz_fdiv_qr(h.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("product not divisible by (2p)^{(p-3)/2}");
  return h;
}

}  // namespace catalan
