#include "catalan/groupring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catalan {

GroupRingElt::GroupRingElt(unsigned m) : m_(m), units_(units_mod(m)) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  c_.assign(units_.size(), Rat(0));
}

GroupRingElt GroupRingElt::sigma(unsigned m, long t) {
  GroupRingElt e(m);
  e.at(t) = 1;
  return e;
}

Rat& GroupRingElt::at(long t) {
  long r = ((t % m_) + m_) % m_;
  auto it = std::lower_bound(units_.begin(), units_.end(), static_cast<unsigned>(r));
  if (it == units_.end() || *it != static_cast<unsigned>(r))
    throw std::invalid_argument("index is not a unit mod m");
  return c_[it - units_.begin()];
}

const Rat& GroupRingElt::at(long t) const {
  return const_cast<GroupRingElt*>(this)->at(t);
}

bool GroupRingElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool GroupRingElt::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& x) { return x.get_den() == 1; });
}

Rat GroupRingElt::coeff_sum() const {
  Rat s(0);
  for (const Rat& x : c_) s += x;
  return s;
}

Rat GroupRingElt::norm1() const {
  Rat s(0);
  for (const Rat& x : c_) s += abs(x);
  return s;
}

GroupRingElt GroupRingElt::operator+(const GroupRingElt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("modulus mismatch");
  GroupRingElt r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

GroupRingElt GroupRingElt::operator-(const GroupRingElt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("modulus mismatch");
  GroupRingElt r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

GroupRingElt GroupRingElt::operator-() const {
  GroupRingElt r(*this);
  for (Rat& x : r.c_) x = -x;
  return r;
}

GroupRingElt GroupRingElt::operator*(const Rat& s) const {
  GroupRingElt r(*this);
  for (Rat& x : r.c_) x *= s;
  return r;
}

bool GroupRingElt::operator==(const GroupRingElt& o) const {
  return m_ == o.m_ && c_ == o.c_;
}

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
  GroupRingElt r(a.modulus());
  const auto& units = a.units();
  for (size_t i = 0; i < units.size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < units.size(); ++j) {
      if (b.coeffs()[j] == 0) continue;
      long u = static_cast<long>(units[i]) * units[j];
      r.at(u) += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return r;
}

GroupRingElt theta(unsigned m) {
  if (m < 3) throw std::invalid_argument("need m >= 3");
  GroupRingElt r(m);
  for (unsigned t : r.units()) r.at(inv_mod(t, m)) = Rat(t, m);
  return r;
}

GroupRingElt theta_b(unsigned m, long b) {
  GroupRingElt r(m);
  long rb = ((b % m) + m) % m;
  if (m > 1 && std::gcd(rb, static_cast<long>(m)) != 1)
    throw std::invalid_argument("b must be coprime to m");
  for (unsigned t : r.units()) {
    Int num = Int(b) * t;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(m).get_mpz_t());
    r.at(inv_mod(t, m)) = -Rat(q);
  }
  return r;
}

StickelbergerBasis stickelberger_basis(unsigned p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("need an odd prime");
  auto g = [&](unsigned b) {
    GroupRingElt r(p);
    for (unsigned a = 1; a < p; ++a) r.at(inv_mod(a, p)) = (a * b) / p;
    return r;
  };
  StickelbergerBasis out{{}, {}, GroupRingElt(p)};
  for (unsigned i = 1; i < p; ++i) out.f.push_back(g(i + 1) - g(i));
  GroupRingElt iota = GroupRingElt::sigma(p, -1);
  for (unsigned i = 1; i <= (p - 1) / 2; ++i)
    out.e.push_back(out.f[i - 1] - gr_mul(iota, out.f[i - 1]));
  for (unsigned t = 1; t < p; ++t) out.sG.at(t) = 1;
  return out;
}

unsigned lattice_rank(const std::vector<GroupRingElt>& basis) {
  if (basis.empty()) return 0;
  size_t cols = basis[0].coeffs().size();
  std::vector<std::vector<Int>> M;
  for (const auto& e : basis) {
    if (e.coeffs().size() != cols) throw std::invalid_argument("mixed moduli");
    Int den(1);
    for (const Rat& x : e.coeffs()) den = lcm(den, x.get_den());
    std::vector<Int> row;
    row.reserve(cols);
    for (const Rat& x : e.coeffs()) row.push_back(Rat(x * den).get_num());
    M.push_back(std::move(row));
  }
  // Bareiss fraction-free elimination; divisions are exact.
  size_t rank = 0;
  Int prev(1);
  for (size_t col = 0; col < cols && rank < M.size(); ++col) {
    size_t piv = rank;
    while (piv < M.size() && M[piv][col] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[rank]);
    for (size_t i = rank + 1; i < M.size(); ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        Int t = M[rank][col] * M[i][j] - M[i][col] * M[rank][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][col] = 0;
    }
    prev = M[rank][col];
    ++rank;
  }
  return static_cast<unsigned>(rank);
}

CycRat act(const GroupRingElt& th, const CycRat& x) {
  if (th.modulus() != x.order())
    throw std::invalid_argument("modulus does not match element order");
  if (!th.is_integral()) throw std::invalid_argument("exponent must be integral");
  CycRat r = CycRat::one(x.order());
  const auto& units = th.units();
  for (size_t i = 0; i < units.size(); ++i) {
    const Rat& a = th.coeffs()[i];
    if (a == 0) continue;
    if (a < 0) throw std::invalid_argument("negative exponent unsupported");
    r = r * x.galois(units[i]).pow(a.get_num().get_ui());
  }
  return r;
}

bool semisimple_check(unsigned long q, unsigned n) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  // gcd(x^n - 1, n x^{n-1}) over F_q
  auto trim = [](std::vector<unsigned long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  std::vector<unsigned long> a(n + 1, 0), b(n, 0);
  a[0] = q - 1;
  a[n] = 1;
  b[n - 1] = n % q;
  trim(b);
  while (!b.empty()) {
    // a mod b
    unsigned long lead_inv =
        static_cast<unsigned long>(inv_mod(static_cast<long>(b.back()), static_cast<long>(q)));
    while (a.size() >= b.size()) {
      unsigned long c = a.back() * lead_inv % q;
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + (q - c * b[j] % q)) % q;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

SeriesReport mihailescu_series(unsigned p, unsigned q, const GroupRingElt& th,
                               unsigned K) {
  if (th.modulus() != p) throw std::invalid_argument("theta modulus must be p");
  if (!th.is_integral()) throw std::invalid_argument("theta must be integral");
  SeriesReport rep;
  rep.p = p;
  rep.q = q;
  rep.K = K;
  std::vector<CycRat> F(K + 1, CycRat::zero(p));
  F[0] = CycRat::one(p);
  const auto& units = th.units();
  for (size_t i = 0; i < units.size(); ++i) {
    const Rat& nt = th.coeffs()[i];
    if (nt == 0) continue;
    if (nt < 0 || nt > q) throw std::invalid_argument("coefficient outside [0, q]");
    // (1 - zeta_p^t T)^{n/q}: coefficient of T^k is binom(n/q, k) (-zeta_p^t)^k
    CycRat mx = -CycRat::root_of_unity(p, units[i]);
    std::vector<CycRat> factor(K + 1, CycRat::zero(p));
    Rat binom(1);
    CycRat xk = CycRat::one(p);
    for (unsigned k = 0; k <= K; ++k) {
      factor[k] = xk * binom;
      binom *= (Rat(nt) / q - k) / (k + 1);
      xk = xk * mx;
    }
    std::vector<CycRat> next(K + 1, CycRat::zero(p));
    for (unsigned i1 = 0; i1 <= K; ++i1)
      for (unsigned i2 = 0; i1 + i2 <= K; ++i2)
        next[i1 + i2] = next[i1 + i2] + F[i1] * factor[i2];
    F = std::move(next);
  }
  rep.coeffs = F;
  rep.integrality_pass = true;
  rep.congruence_pass = true;
  CycRat base = CycRat::zero(p);
  for (size_t i = 0; i < units.size(); ++i)
    base = base - CycRat::root_of_unity(p, units[i]) * th.coeffs()[i];
  Rat scale(1);  // k! q^k
  for (unsigned k = 0; k <= K; ++k) {
    if (k > 0) scale *= Rat(k) * q;
    CycRat ak = F[k] * scale;
    rep.a.push_back(ak);
    if (!ak.is_integral()) {
      rep.integrality_pass = false;
      continue;
    }
    CycRat diff = ak - base.pow(k);
    for (const Rat& c : diff.coeffs())
      if (c.get_den() != 1 || c.get_num() % q != 0) rep.congruence_pass = false;
  }
  return rep;
}

}  // namespace catalan
