#include "catalan/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace catalan {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<unsigned> units_mod(unsigned m) {
  if (m == 1) return {0};
  std::vector<unsigned> u;
  for (unsigned t = 1; t < m; ++t)
    if (std::gcd(t, m) == 1) u.push_back(t);
  return u;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = (long)((__int128)r * b % m);
    b = (long)((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

long inv_mod(long a, long m) {
  long old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    long q = old_r / r;
    long t = old_r - q * r; old_r = r; r = t;
    t = old_s - q * s; old_s = s; s = t;
  }
  if (old_r != 1) throw std::invalid_argument("inv_mod: not invertible");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * (long)i);
  d.normalize();
  return d;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r = a.c;
  const long db = b.degree();
  if (db < 0) throw std::invalid_argument("exact_div: zero divisor");
  std::vector<Int> q(r.size() > (size_t)db ? r.size() - db : 0, Int(0));
  for (long i = (long)r.size() - 1 - db; i >= 0; --i) {
    Int coef = r[i + db] / b.c[db];
    q[i] = coef;
    if (coef != 0)
      for (long j = 0; j <= db; ++j) r[i + j] -= coef * b.c[j];
  }
  for (const auto& x : r)
    if (x != 0) throw std::logic_error("exact_div: nonzero remainder");
  return IntPoly(std::move(q));
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // (x^n - 1) / prod_{d|n, d<n} Phi_d, computed iteratively over divisors.
  std::function<const IntPoly&(unsigned)> get = [&](unsigned k) -> const IntPoly& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    std::vector<Int> xn(k + 1, Int(0));
    xn[0] = -1;
    xn[k] = 1;
    IntPoly acc(std::move(xn));
    for (unsigned d : divisors(k))
      if (d != k) acc = exact_div(acc, get(d));
    return cache.emplace(k, std::move(acc)).first->second;
  };
  return get(n);
}

namespace {

// Reduce a rational polynomial mod Phi_n and truncate to length phi(n).
std::vector<Rat> reduce_mod_phi(std::vector<Rat> r, unsigned n) {
  const IntPoly& phi = cyclotomic_polynomial(n);
  const long d = phi.degree();
  for (long i = (long)r.size() - 1; i >= d; --i) {
    if (r[i] == 0) continue;
    Rat coef = r[i];
    for (long j = 0; j < d; ++j) r[i - d + j] -= coef * phi.c[j];
    r[i] = 0;
  }
  r.resize(d, Rat(0));
  for (auto& x : r) x.canonicalize();
  return r;
}

}  // namespace

CycRat::CycRat(unsigned order, std::vector<Rat> poly) : order_(order) {
  if (order == 0) throw std::invalid_argument("CycRat: order must be positive");
  c_ = reduce_mod_phi(std::move(poly), order);
}

CycRat CycRat::zero(unsigned n) { return CycRat(n, {}); }

CycRat CycRat::one(unsigned n) { return from_rational(Rat(1), n); }

CycRat CycRat::from_rational(const Rat& r, unsigned n) {
  return CycRat(n, std::vector<Rat>{r});
}

CycRat CycRat::root_of_unity(unsigned n, long k) {
  long e = k % (long)n;
  if (e < 0) e += n;
  std::vector<Rat> p(e + 1, Rat(0));
  p[e] = 1;
  return CycRat(n, std::move(p));
}

bool CycRat::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycRat::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycRat::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycRat: not rational");
  return c_[0];
}

bool CycRat::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

CycRat CycRat::operator+(const CycRat& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycRat: order mismatch");
  CycRat r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycRat CycRat::operator-(const CycRat& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycRat: order mismatch");
  CycRat r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycRat CycRat::operator-() const {
  CycRat r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycRat CycRat::operator*(const CycRat& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycRat: order mismatch");
  std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return CycRat(order_, std::move(prod));
}

CycRat CycRat::operator*(const Rat& r) const {
  CycRat out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

namespace {

struct QPoly {
  std::vector<Rat> c;
  void norm() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long deg() const { return (long)c.size() - 1; }
};

QPoly qp_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly r;
  size_t n = std::max(a.c.size(), q.c.size() + b.c.size());
  r.c.assign(n, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) {
    if (q.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] -= q.c[i] * b.c[j];
  }
  r.norm();
  return r;
}

QPoly qp_divmod(const QPoly& a, const QPoly& b, QPoly* rem) {
  QPoly q, r = a;
  r.norm();
  long db = b.deg();
  q.c.assign(r.deg() >= db ? r.deg() - db + 1 : 0, Rat(0));
  while (r.deg() >= db) {
    Rat coef = r.c.back() / b.c.back();
    long shift = r.deg() - db;
    q.c[shift] += coef;
    for (long j = 0; j <= db; ++j) r.c[shift + j] -= coef * b.c[j];
    r.norm();
  }
  if (rem) *rem = r;
  return q;
}

}  // namespace

CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycRat: division by zero");
  // Extended gcd of the representing polynomial with Phi_n over Q.
  const IntPoly& phi = cyclotomic_polynomial(order_);
  QPoly a, b, s0, s1;
  b.c = c_;
  b.norm();
  a.c.reserve(phi.c.size());
  for (const auto& x : phi.c) a.c.push_back(Rat(x));
  s0.c = {};            // coefficient of b in a
  s1.c = {Rat(1)};      // coefficient of b in b
  while (b.deg() >= 0) {
    QPoly r;
    QPoly q = qp_divmod(a, b, &r);
    QPoly s2 = qp_sub_mul(s0, q, s1);
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
  }
  if (a.deg() != 0) throw std::logic_error("CycRat: gcd with Phi_n not constant");
  Rat lead = a.c[0];
  for (auto& x : s0.c) x /= lead;
  return CycRat(order_, std::move(s0.c));
}

CycRat CycRat::pow(unsigned long e) const {
  CycRat base = *this, acc = one(order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

CycRat CycRat::galois(long t) const {
  long tm = t % (long)order_;
  if (tm < 0) tm += order_;
  if (order_ > 1 && std::gcd((unsigned long)tm, (unsigned long)order_) != 1)
    throw std::invalid_argument("CycRat: invalid automorphism index");
  std::vector<Rat> p(order_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    p[(size_t)((unsigned long)i * (unsigned long)tm % order_)] += c_[i];
  }
  return CycRat(order_, std::move(p));
}

Rat CycRat::norm() const {
  CycRat acc = one(order_);
  for (unsigned t : units_mod(order_)) acc = acc * galois(order_ == 1 ? 1 : (long)t);
  return acc.rational_value();
}

CycRat CycRat::embed(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ == 0) {
    unsigned k = new_order / order_;
    std::vector<Rat> p((c_.size() - 1) * k + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) p[i * k] = c_[i];
    return CycRat(new_order, std::move(p));
  }
  if (order_ % new_order != 0)
    throw std::invalid_argument("CycRat: orders not nested");
  // Down-embedding: solve for a representation in Q(zeta_new) and verify.
  unsigned d = new_order, N = order_, stride = N / d;
  unsigned phiN = euler_phi(N), phid = euler_phi(d);
  // Column j: zeta_N^{j*stride} reduced.
  std::vector<std::vector<Rat>> M(phiN, std::vector<Rat>(phid + 1, Rat(0)));
  for (unsigned j = 0; j < phid; ++j) {
    CycRat col = root_of_unity(N, (long)j * stride);
    for (unsigned i = 0; i < phiN; ++i) M[i][j] = col.coeffs()[i];
  }
  for (unsigned i = 0; i < phiN; ++i) M[i][phid] = c_[i];
  // Gaussian elimination, consistency check on the augmented system.
  unsigned row = 0;
  std::vector<long> pivot_col(phid, -1);
  for (unsigned col = 0; col < phid && row < phiN; ++col) {
    unsigned sel = row;
    while (sel < phiN && M[sel][col] == 0) ++sel;
    if (sel == phiN) continue;
    std::swap(M[sel], M[row]);
    Rat inv = 1 / M[row][col];
    for (unsigned j = col; j <= phid; ++j) M[row][j] *= inv;
    for (unsigned i = 0; i < phiN; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (unsigned j = col; j <= phid; ++j) M[i][j] -= f * M[row][j];
    }
    pivot_col[col] = row;
    ++row;
  }
  std::vector<Rat> sol(phid, Rat(0));
  for (unsigned col = 0; col < phid; ++col)
    if (pivot_col[col] >= 0) sol[col] = M[pivot_col[col]][phid];
  for (unsigned i = row; i < phiN; ++i)
    if (M[i][phid] != 0) throw std::domain_error("CycRat: element not in subfield");
  CycRat out(d, std::move(sol));
  if (out.embed(N) != *this) throw std::domain_error("CycRat: element not in subfield");
  return out;
}

CycRat cyclotomic_unit_xi(unsigned p, unsigned a) {
  if (a % p == 0 || a % p == 1) throw std::invalid_argument("xi_a: index 0 or 1 mod p");
  long e = ((1 - (long)a) % (long)p) * inv_mod(2, p) % (long)p;
  if (e < 0) e += p;
  // (zeta^a - 1)/(zeta - 1) = 1 + zeta + ... + zeta^{a-1}
  std::vector<Rat> geo(a % p, Rat(1));
  CycRat ratio(p, std::move(geo));
  return CycRat::root_of_unity(p, e) * ratio;
}

Rat kummer_sum_identity(unsigned p) {
  // 1/(1 - zeta^i) = -(1/p) * sum_k k zeta^{ik}
  CycRat total = CycRat::zero(p);
  for (unsigned i = 1; i < p; ++i) {
    std::vector<Rat> inv(p, Rat(0));
    for (unsigned k = 1; k < p; ++k)
      inv[(size_t)((unsigned long)i * k % p)] -= Rat((long)k, (long)p);
    CycRat invc(p, std::move(inv));
    total = total + CycRat::root_of_unity(p, i) * invc * invc;
  }
  if (!total.is_rational())
    throw std::logic_error("kummer_sum_identity: sum is not rational");
  return total.rational_value();
}

}  // namespace catalan
