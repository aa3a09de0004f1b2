#include "catalan/padic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace catalan {

namespace {

Int int_pow(unsigned long b, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

long val_l(const Int& x, unsigned long l) {
  if (x == 0) return -1;  // caller treats as "exact zero"
  Int q;
  return static_cast<long>(
      mpz_remove(q.get_mpz_t(), x.get_mpz_t(), Int(l).get_mpz_t()));
}

// Arithmetic in (Z/l^K)[x]/(M(x)) with M monic of degree f.
struct ExtRing {
  unsigned f;
  Int lK;
  std::vector<Int> mod;  // non-leading coefficients of M

  std::vector<Int> reduce_scalar(std::vector<Int> v) const {
    for (auto& c : v) {
      c %= lK;
      if (c < 0) c += lK;
    }
    return v;
  }

  std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> t(2 * f - 1, Int(0));
    for (unsigned i = 0; i < f; ++i)
      for (unsigned j = 0; j < f; ++j) t[i + j] += a[i] * b[j];
    for (unsigned i = 2 * f - 2; i + 1 > f; --i) {
      Int c = t[i] % lK;
      t[i] = 0;
      for (unsigned j = 0; j < f; ++j) t[i - f + j] -= c * mod[j];
    }
    t.resize(f);
    return reduce_scalar(std::move(t));
  }

  std::vector<Int> add(std::vector<Int> a, const std::vector<Int>& b) const {
    for (unsigned i = 0; i < f; ++i) a[i] += b[i];
    return reduce_scalar(std::move(a));
  }

  std::vector<Int> sub(std::vector<Int> a, const std::vector<Int>& b) const {
    for (unsigned i = 0; i < f; ++i) a[i] -= b[i];
    return reduce_scalar(std::move(a));
  }

  std::vector<Int> scalar(const Int& c) const {
    std::vector<Int> v(f, Int(0));
    v[0] = c;
    return reduce_scalar(std::move(v));
  }

  bool is_zero(const std::vector<Int>& a) const {
    return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
  }

  std::vector<Int> eval_poly(const IntPoly& poly, const std::vector<Int>& x) const {
    std::vector<Int> acc(f, Int(0));
    for (auto it = poly.c.rbegin(); it != poly.c.rend(); ++it) {
      acc = mul(acc, x);
      acc[0] += *it;
      acc = reduce_scalar(std::move(acc));
    }
    return acc;
  }

  // Inverse of a unit, lifted from the residue field.
  std::vector<Int> inverse(const std::vector<Int>& u, const FqField& field) const {
    unsigned long l = field.p();
    std::vector<unsigned> u0(f);
    for (unsigned i = 0; i < f; ++i)
      u0[i] = static_cast<unsigned>(mpz_class(u[i] % l).get_ui());
    unsigned idx = field.encode(u0);
    if (idx == 0) throw std::domain_error("not a unit");
    unsigned inv_idx = field.exp(field.q() - 1 - field.log(idx));
    std::vector<unsigned> v0 = field.decode(inv_idx);
    std::vector<Int> v(f);
    for (unsigned i = 0; i < f; ++i) v[i] = v0[i];
    // v <- v (2 - u v) doubles the precision each round
    for (int it = 0; it < 64; ++it) {
      std::vector<Int> uv = mul(u, v);
      std::vector<Int> two = scalar(2);
      v = mul(v, sub(std::move(two), uv));
      if (is_zero(sub(mul(u, v), scalar(1)))) return v;
    }
    throw std::runtime_error("inverse lift failed to converge");
  }
};

}  // namespace

Int hensel_lift(const IntPoly& poly, const Int& root0, unsigned long l,
                unsigned target_K) {
  Int L(static_cast<unsigned long>(l));
  if (poly.eval(root0) % L != 0)
    throw std::invalid_argument("not a root modulo l");
  IntPoly dpoly = poly.derivative();
  if (dpoly.eval(root0) % L == 0)
    throw std::domain_error("root is not simple modulo l");
  Int lK = int_pow(l, target_K);
  Int r = root0 % lK;
  if (r < 0) r += lK;
  for (int it = 0; it < 64; ++it) {
    Int fr = poly.eval(r) % lK;
    if (fr == 0) return r;
    Int d = dpoly.eval(r) % lK;
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), lK.get_mpz_t()) == 0)
      throw std::domain_error("derivative not invertible");
    r = (r - fr * dinv) % lK;
    if (r < 0) r += lK;
  }
  throw std::runtime_error("hensel lift failed to converge");
}

std::shared_ptr<PrimeIdeal> PrimeIdeal::above(unsigned long l, unsigned m,
                                              unsigned selector) {
  if (!is_prime(l)) throw std::invalid_argument("l must be prime");
  if (m == 0 || std::gcd(static_cast<unsigned long>(m), l) != 1)
    throw std::invalid_argument("l must not divide m");
  if (m > 1 && std::gcd(selector, m) != 1)
    throw std::invalid_argument("selector must be a unit mod m");
  unsigned f = 1;
  {
    unsigned long r = l % m;
    while (r != 1 % m) {
      r = r * (l % m) % m;
      ++f;
    }
  }
  auto ideal = std::shared_ptr<PrimeIdeal>(new PrimeIdeal());
  ideal->l_ = l;
  ideal->m_ = m;
  ideal->f_ = f;
  ideal->field_ = FqField::build(static_cast<unsigned>(l), f);
  unsigned long q = ideal->field_->q();
  unsigned long k = (q - 1) / m % (q - 1) * (selector % (q - 1)) % (q - 1);
  std::vector<unsigned> digits = ideal->field_->decode(ideal->field_->exp(k));
  ideal->root_.assign(digits.begin(), digits.end());
  ideal->K_ = 1;
  ideal->lK_ = static_cast<unsigned long>(l);
  return ideal;
}

void PrimeIdeal::ensure_precision(unsigned K) {
  if (K_ >= K) return;
  ExtRing ring{f_, int_pow(l_, K), {}};
  ring.mod.reserve(f_);
  for (unsigned c : field_->modulus()) ring.mod.push_back(c);
  const IntPoly& phi = cyclotomic_polynomial(m_);
  IntPoly dphi = phi.derivative();
  std::vector<Int> r = ring.reduce_scalar(root_);
  for (int it = 0; it < 64; ++it) {
    std::vector<Int> fr = ring.eval_poly(phi, r);
    if (ring.is_zero(fr)) {
      root_ = std::move(r);
      K_ = K;
      lK_ = ring.lK;
      return;
    }
    std::vector<Int> dinv = ring.inverse(ring.eval_poly(dphi, r), *field_);
    r = ring.sub(std::move(r), ring.mul(fr, dinv));
  }
  throw std::runtime_error("root lift failed to converge");
}

void PrimeIdeal::raise_precision(unsigned K) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_precision(K);
}

long PrimeIdeal::valuation(const CycRat& alpha) {
  if (alpha.order() != m_)
    throw std::invalid_argument("element order does not match the ideal");
  if (alpha.is_zero()) return kInfiniteValuation;
  Int den(1);
  for (const Rat& c : alpha.coeffs()) den = lcm(den, c.get_den());
  IntPoly num;
  num.c.reserve(alpha.coeffs().size());
  for (const Rat& c : alpha.coeffs()) num.c.push_back(Rat(c * den).get_num());
  num.normalize();
  long dv = val_l(den, l_);

  std::lock_guard<std::mutex> lock(mu_);
  constexpr unsigned kMargin = 4;
  for (unsigned K = std::max(8u, K_); K <= (1u << 16); K *= 2) {
    ensure_precision(K);
    ExtRing ring{f_, lK_, {}};
    for (unsigned c : field_->modulus()) ring.mod.push_back(c);
    std::vector<Int> v = ring.eval_poly(num, root_);
    long minv = K;
    for (const Int& c : v) {
      long w = val_l(c, l_);
      if (w >= 0) minv = std::min(minv, w);
    }
    if (minv + static_cast<long>(kMargin) <= static_cast<long>(K))
      return minv - dv;
  }
  throw std::runtime_error("valuation did not stabilize");
}

RamifiedContext::RamifiedContext(unsigned p, unsigned m, PrimeIdealPtr base)
    : p_(p), m_(m), n_(p * m), base_(std::move(base)) {
  if (!is_prime(p) || std::gcd(p, m) != 1)
    throw std::invalid_argument("need p prime and coprime to m");
  if (!base_ || base_->l() != p || base_->m() != m)
    throw std::invalid_argument("base ideal does not match (p, m)");
  unsigned phi_m = euler_phi(m_);
  unsigned dim = euler_phi(n_);
  CycRat pi = CycRat::root_of_unity(n_, m_) - CycRat::one(n_);
  // columns of B: pi^k zeta_m^i in the power basis of zeta_n
  std::vector<std::vector<Rat>> B(dim, std::vector<Rat>(dim, Rat(0)));
  CycRat pik = CycRat::one(n_);
  for (unsigned k = 0; k + 1 < p_; ++k) {
    for (unsigned i = 0; i < phi_m; ++i) {
      CycRat col = pik * CycRat::root_of_unity(n_, static_cast<long>(p_) * i);
      for (unsigned r = 0; r < dim; ++r) B[r][k * phi_m + i] = col.coeffs()[r];
    }
    pik = pik * pi;
  }
  // invert by Gaussian elimination on [B | I]
  inv_.assign(dim, std::vector<Rat>(dim, Rat(0)));
  for (unsigned i = 0; i < dim; ++i) inv_[i][i] = 1;
  for (unsigned col = 0; col < dim; ++col) {
    unsigned piv = col;
    while (piv < dim && B[piv][col] == 0) ++piv;
    if (piv == dim) throw std::logic_error("basis matrix is singular");
    std::swap(B[piv], B[col]);
    std::swap(inv_[piv], inv_[col]);
    Rat d = B[col][col];
    for (unsigned j = 0; j < dim; ++j) {
      B[col][j] /= d;
      inv_[col][j] /= d;
    }
    for (unsigned r = 0; r < dim; ++r) {
      if (r == col || B[r][col] == 0) continue;
      Rat c = B[r][col];
      for (unsigned j = 0; j < dim; ++j) {
        B[r][j] -= c * B[col][j];
        inv_[r][j] -= c * inv_[col][j];
      }
    }
  }
}

std::vector<CycRat> RamifiedContext::pi_expand(const CycRat& alpha) const {
  if (alpha.order() != n_)
    throw std::invalid_argument("element order does not match the context");
  unsigned phi_m = euler_phi(m_);
  unsigned dim = euler_phi(n_);
  std::vector<Rat> y(dim, Rat(0));
  for (unsigned r = 0; r < dim; ++r)
    for (unsigned j = 0; j < dim; ++j) y[r] += inv_[r][j] * alpha.coeffs()[j];
  std::vector<CycRat> out;
  out.reserve(p_ - 1);
  for (unsigned k = 0; k + 1 < p_; ++k) {
    std::vector<Rat> c(y.begin() + k * phi_m, y.begin() + (k + 1) * phi_m);
    out.emplace_back(m_, std::move(c));
  }
  // exact linear algebra, but cheap to confirm the round trip
  CycRat pi = CycRat::root_of_unity(n_, m_) - CycRat::one(n_);
  CycRat pik = CycRat::one(n_);
  CycRat back = CycRat::zero(n_);
  for (unsigned k = 0; k + 1 < p_; ++k) {
    back = back + out[k].embed(n_) * pik;
    pik = pik * pi;
  }
  if (back != alpha) throw std::logic_error("pi expansion round trip failed");
  return out;
}

long RamifiedContext::valuation(const CycRat& alpha) const {
  std::vector<CycRat> c = pi_expand(alpha);
  long best = kInfiniteValuation;
  for (unsigned k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    long v = static_cast<long>(k) +
             static_cast<long>(p_ - 1) * base_->valuation(c[k]);
    best = std::min(best, v);
  }
  return best;
}

DigitProfile digit_profile(long a, unsigned p, unsigned f) {
  DigitProfile out;
  out.a = a;
  out.p = p;
  out.f = f;
  unsigned long q = 1;
  for (unsigned i = 0; i < f; ++i) q *= p;
  long period = static_cast<long>(q - 1);
  unsigned long r = static_cast<unsigned long>(((a % period) + period) % period);
  out.digits.resize(f);
  out.gamma = 1;
  unsigned long rr = r;
  for (unsigned i = 0; i < f; ++i) {
    out.digits[i] = static_cast<unsigned>(rr % p);
    rr /= p;
    out.s += out.digits[i];
    Int fac;
    mpz_fac_ui(fac.get_mpz_t(), out.digits[i]);
    out.gamma *= fac;
  }
  // s(a) = (p-1) sum_i <p^i a / (q-1)>
  unsigned long frac_num = 0;  // sum of (p^i r mod (q-1)), over denominator q-1
  unsigned long pi = 1;
  for (unsigned i = 0; i < f; ++i) {
    frac_num += pi % (q - 1) * (r % (q - 1)) % (q - 1);
    pi *= p;
  }
  if ((p - 1) * frac_num != static_cast<unsigned long>(out.s) * (q - 1))
    throw std::logic_error("digit sum identity failed");
  return out;
}

namespace {

// Minimal polynomial over F_p of an element of F_q, ascending coefficients.
// The coefficients lie in the prime field, so each entry is < p.
std::vector<unsigned> prime_field_min_poly(const FqField& F, unsigned beta) {
  std::vector<unsigned> poly{1};
  unsigned b = beta;
  do {
    std::vector<unsigned> next(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], poly[i]);
      next[i] = F.sub(next[i], F.mul(poly[i], b));
    }
    poly = std::move(next);
    b = F.pow(b, F.p());
  } while (b != beta);
  return poly;
}

std::shared_ptr<RamifiedContext> ramified_context_for(unsigned p, unsigned f) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<RamifiedContext>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, f);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  unsigned long q = 1;
  for (unsigned i = 0; i < f; ++i) q *= p;
  unsigned m = static_cast<unsigned>(q - 1);
  auto ctx = std::make_shared<RamifiedContext>(p, m, PrimeIdeal::above(p, m, 1));
  cache[key] = ctx;
  return ctx;
}

}  // namespace

CongruenceReport stickelberger_congruence_check(unsigned p, unsigned f, long a) {
  CongruenceReport rep;
  rep.p = p;
  rep.f = f;
  rep.a = a;
  FieldPtr field = FqField::build(p, f);
  unsigned long q = field->q();
  unsigned n = static_cast<unsigned>((q - 1) * p);
  DigitProfile prof = digit_profile(a, p, f);
  rep.s = prof.s;
  long period = static_cast<long>(q - 1);
  unsigned d = static_cast<unsigned>((((-a) % period) + period) % period);
  CycRat G = gauss_sum(field, MultCharacter{field, d});
  auto ctx = ramified_context_for(p, f);
  rep.v_gauss = ctx->valuation(G);
  rep.eq6_pass = (rep.v_gauss == static_cast<long>(prof.s));
  CycRat pi = CycRat::root_of_unity(n, static_cast<long>(q - 1)) - CycRat::one(n);
  CycRat delta = G * Rat(prof.gamma) - pi.pow(prof.s);
  rep.v_delta = ctx->valuation(delta);
  rep.congruence_pass = (rep.v_delta >= static_cast<long>(prof.s) + 1);
  return rep;
}

RelationReport stickelberger_relation_check(unsigned p, unsigned f, unsigned m) {
  RelationReport rep;
  rep.p = p;
  rep.f = f;
  rep.m = m;
  FieldPtr field = FqField::build(p, f);
  unsigned long q = field->q();
  if (m < 2 || (q - 1) % m != 0)
    throw std::invalid_argument("m must divide q - 1 and exceed 1");
  unsigned d = static_cast<unsigned>((q - 1) - (q - 1) / m);
  CycRat Gm = gauss_power_in_subfield(field, MultCharacter{field, d});
  if (Gm.order() != m) Gm = Gm.embed(m);
  rep.valuations_pass = true;
  long total = 0;
  for (unsigned t : units_mod(m)) {
    long a_t = static_cast<long>(t) * static_cast<long>((q - 1) / m);
    unsigned s = digit_profile(a_t, p, f).s;
    long num = static_cast<long>(m) * static_cast<long>(s);
    if (num % (p - 1) != 0) {
      rep.valuations_pass = false;
      continue;
    }
    long r_t = num / (p - 1);
    total += r_t;
    // The prime selected by t is determined by the minimal polynomial of
    // g^{t(q-1)/m}; relabel into the standalone residue field F_{p^{f'}}.
    std::vector<unsigned> h = prime_field_min_poly(
        *field, field->exp(static_cast<unsigned long>(a_t)));
    PrimeIdealPtr P;
    for (unsigned u : units_mod(m)) {
      auto cand = PrimeIdeal::above(p, m, u);
      const FqField& Fr = *cand->residue_field();
      unsigned root = Fr.exp(static_cast<unsigned long>(Fr.q() - 1) / m * u);
      unsigned acc = 0;
      for (auto it = h.rbegin(); it != h.rend(); ++it)
        acc = Fr.add(Fr.mul(acc, root), *it);
      if (acc == 0) {
        P = std::move(cand);
        break;
      }
    }
    if (!P) throw std::logic_error("no residue root matches the minimal polynomial");
    long v = P->valuation(Gm);
    if (v != r_t) rep.valuations_pass = false;
  }
  Rat N = Gm.norm();
  if (N.get_den() != 1) throw std::logic_error("norm is not an integer");
  rep.norm_pass = (val_l(N.get_num(), p) == total);
  return rep;
}

}  // namespace catalan
