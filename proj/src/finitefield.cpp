#include "catalan/finitefield.hpp"

#include <numeric>
#include <stdexcept>

namespace catalan {

namespace {

using Poly = std::vector<unsigned>;  // dense mod-p coefficients, c[i] of x^i

void norm(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  // mod is monic: mod = x^f + sum mod[i] x^i given as non-leading coeffs.
  if (a.empty() || b.empty()) return {};
  const size_t f = mod.size();
  std::vector<unsigned long> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += (unsigned long)a[i] * b[j];
  for (size_t i = prod.size(); i-- > f;) {
    unsigned long c = prod[i] % p;
    if (c) {
      for (size_t j = 0; j < f; ++j)
        prod[i - f + j] += (unsigned long)(p - mod[j]) * c % p * 1ul;
    }
    prod[i] = 0;
  }
  Poly r(f, 0);
  for (size_t i = 0; i < f && i < prod.size(); ++i) r[i] = (unsigned)(prod[i] % p);
  norm(r);
  return r;
}

Poly powmod(Poly a, unsigned long e, const Poly& mod, unsigned p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = mulmod(r, a, mod, p);
    e >>= 1;
    if (e) a = mulmod(a, a, mod, p);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  norm(a);
  norm(b);
  while (!b.empty()) {
    // a <- a mod b
    unsigned binv = (unsigned)inv_mod((long)b.back(), (long)p);
    while (a.size() >= b.size()) {
      unsigned lead = (unsigned)((unsigned long)a.back() * binv % p);
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] =
            (unsigned)((a[shift + j] + (unsigned long)lead * (p - b[j])) % p);
      norm(a);
      if (a.size() >= shift + b.size()) a.resize(shift + b.size() - 1), norm(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool irreducible(const Poly& mod, unsigned p, unsigned f) {
  if (f == 1) return true;
  // x^{p^f} == x mod m, and gcd(x^{p^{f/l}} - x, m) = 1 for prime l | f.
  Poly x = {0, 1};
  unsigned long pf = 1;
  for (unsigned i = 0; i < f; ++i) pf *= p;
  Poly xq = powmod(x, pf, mod, p);
  if (xq != x) return false;
  for (unsigned l : prime_factors(f)) {
    unsigned long e = 1;
    for (unsigned i = 0; i < f / l; ++i) e *= p;
    Poly t = powmod(x, e, mod, p);
    // t - x
    size_t n = std::max(t.size(), x.size());
    t.resize(n, 0);
    Poly xx = x;
    xx.resize(n, 0);
    for (size_t i = 0; i < n; ++i) t[i] = (t[i] + p - xx[i]) % p;
    norm(t);
    Poly m = mod;
    m.push_back(1);  // full monic polynomial
    Poly g = poly_gcd(m, t, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<unsigned> FqField::decode(unsigned idx) const {
  std::vector<unsigned> v(f_);
  for (unsigned i = 0; i < f_; ++i) {
    v[i] = idx % p_;
    idx /= p_;
  }
  return v;
}

unsigned FqField::encode(const std::vector<unsigned>& v) const {
  unsigned idx = 0;
  for (unsigned i = f_; i-- > 0;) idx = idx * p_ + (i < v.size() ? v[i] % p_ : 0);
  return idx;
}

unsigned FqField::add(unsigned a, unsigned b) const {
  auto va = decode(a), vb = decode(b);
  for (unsigned i = 0; i < f_; ++i) va[i] = (va[i] + vb[i]) % p_;
  return encode(va);
}

unsigned FqField::sub(unsigned a, unsigned b) const {
  auto va = decode(a), vb = decode(b);
  for (unsigned i = 0; i < f_; ++i) va[i] = (va[i] + p_ - vb[i]) % p_;
  return encode(va);
}

unsigned FqField::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[((unsigned long)log(a) + log(b)) % (q_ - 1)];
}

unsigned FqField::pow(unsigned a, unsigned long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[(unsigned long)log(a) * (e % (q_ - 1)) % (q_ - 1)];
}

unsigned FqField::log(unsigned a) const {
  if (a == 0) throw std::domain_error("FqField: log of zero");
  return log_[a];
}

unsigned FqField::mult_order(unsigned a) const {
  if (a == 0) throw std::domain_error("FqField: order of zero");
  unsigned l = log(a);
  return (q_ - 1) / std::gcd((unsigned long)l, (unsigned long)(q_ - 1));
}

unsigned FqField::trace(unsigned a) const { return trace_[a]; }

std::shared_ptr<const FqField> FqField::build(unsigned p, unsigned f) {
  if (!is_prime(p)) throw std::invalid_argument("FqField: p is not prime");
  if (f == 0) throw std::invalid_argument("FqField: f must be positive");
  auto F = std::shared_ptr<FqField>(new FqField());
  F->p_ = p;
  F->f_ = f;
  unsigned long q = 1;
  for (unsigned i = 0; i < f; ++i) q *= p;
  F->q_ = (unsigned)q;

  // First monic degree-f polynomial (coefficients scanned as base-p digits of
  // k, constant term fastest) that is irreducible mod p.
  for (unsigned k = 0;; ++k) {
    Poly mod(f);
    unsigned kk = k;
    for (unsigned i = 0; i < f; ++i) {
      mod[i] = kk % p;
      kk /= p;
    }
    if (irreducible(mod, p, f)) {
      F->modulus_ = mod;
      break;
    }
  }

  // Multiplication without tables, used to bootstrap them.
  auto raw_mul = [&](unsigned a, unsigned b) {
    Poly va = F->decode(a), vb = F->decode(b);
    norm(va);
    norm(vb);
    if (va.empty() || vb.empty()) return 0u;
    Poly r = mulmod(va, vb, F->modulus_, p);
    r.resize(f, 0);
    std::vector<unsigned> rv(r.begin(), r.end());
    return F->encode(rv);
  };

  auto order_of = [&](unsigned a) {
    unsigned acc = a, ord = 1;
    while (acc != 1) {
      acc = raw_mul(acc, a);
      ++ord;
      if (ord > q) throw std::logic_error("FqField: order overflow");
    }
    return ord;
  };

  // First element of multiplicative order q-1 by ascending index.
  unsigned gen = 0;
  for (unsigned a = 1; a < q; ++a) {
    if (order_of(a) == q - 1) {
      gen = a;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("FqField: no generator found");
  // Verify order against the factorization of q-1.
  for (unsigned l : prime_factors((unsigned)(q - 1))) {
    unsigned acc = 1;
    for (unsigned i = 0; i < (q - 1) / l; ++i) acc = raw_mul(acc, gen);
    if (acc == 1) throw std::logic_error("FqField: generator order check failed");
  }
  F->gen_ = gen;

  F->exp_.resize(q - 1);
  F->log_.assign(q, 0);
  unsigned acc = 1;
  for (unsigned k = 0; k < q - 1; ++k) {
    F->exp_[k] = acc;
    F->log_[acc] = k;
    acc = raw_mul(acc, gen);
  }
  if (acc != 1) throw std::logic_error("FqField: exp table inconsistent");

  F->trace_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    unsigned s = 0, t = a;
    for (unsigned i = 0; i < f; ++i) {
      s = F->add(s, t);
      t = (t == 0) ? 0 : F->exp_[(unsigned long)F->log_[t] * p % (q - 1)];
    }
    auto v = F->decode(s);
    for (unsigned i = 1; i < f; ++i)
      if (v[i] != 0) throw std::logic_error("FqField: trace not in prime field");
    F->trace_[a] = v[0];
  }
  return F;
}

unsigned MultCharacter::order() const {
  unsigned r = field->q() - 1;
  return r / std::gcd((unsigned long)d, (unsigned long)r);
}

MultCharacter MultCharacter::inverse_char() const {
  unsigned r = field->q() - 1;
  return {field, d == 0 ? 0 : r - d};
}

MultCharacter MultCharacter::operator*(const MultCharacter& o) const {
  unsigned r = field->q() - 1;
  return {field, (unsigned)(((unsigned long)d + o.d) % r)};
}

int MultCharacter::sign_at_minus_one() const {
  const auto& F = *field;
  if (F.p() == 2) return 1;  // -1 = 1
  unsigned m1 = F.sub(0, 1);
  unsigned long e = (unsigned long)d * F.log(m1) % (F.q() - 1);
  return e == 0 ? 1 : (2 * e == F.q() - 1 ? -1 : throw std::logic_error("chi(-1) not real"));
}

CycRat char_eval(const MultCharacter& chi, const FqElt& x) {
  const auto& F = *chi.field;
  unsigned r = F.q() - 1;
  if (x.idx == 0)
    return chi.is_trivial() ? CycRat::one(r) : CycRat::zero(r);
  return CycRat::root_of_unity(r, (long)((unsigned long)chi.d * F.log(x.idx) % r));
}

unsigned trace(const FqElt& x) { return x.field->trace(x.idx); }

unsigned discrete_log(const FqElt& x) { return x.field->log(x.idx); }

unsigned additive_char_exponent(const FqElt& x) { return x.field->trace(x.idx); }

}  // namespace catalan
