#include "catalan/bicyclic.hpp"

#include <sstream>
#include <stdexcept>

namespace catalan {

GaussSumChecker::GaussSumChecker(FieldPtr field)
    : field_(std::move(field)), p_(field_->p()), r_(field_->q() - 1) {
  const IntPoly& phi = cyclotomic_polynomial(r_);
  for (const auto& c : phi.c) {
    if (!c.fits_slong_p()) throw std::logic_error("GaussSumChecker: Phi overflow");
    phi_r_.push_back(c.get_si());
  }
}

GaussSumChecker::Terms GaussSumChecker::gauss_terms(unsigned d) const {
  Terms t;
  t.reserve(r_);
  for (unsigned k = 0; k < r_; ++k) {
    unsigned x = field_->exp(k);
    t.push_back({(unsigned)((unsigned long)d * k % r_), field_->trace(x), -1});
  }
  return t;
}

GaussSumChecker::Terms GaussSumChecker::conj_terms(const Terms& in) const {
  Terms t = in;
  for (auto& m : t) {
    m.er = m.er ? r_ - m.er : 0;
    m.ep = m.ep ? p_ - m.ep : 0;
  }
  return t;
}

GaussSumChecker::Terms GaussSumChecker::jacobi_terms(unsigned d1, unsigned d2) const {
  Terms t;
  const auto& F = *field_;
  for (unsigned x = 0; x < F.q(); ++x) {
    unsigned u = F.sub(1, x);
    if ((x == 0 && d1 != 0) || (u == 0 && d2 != 0)) continue;
    unsigned long e1 = x == 0 ? 0 : (unsigned long)d1 * F.log(x) % r_;
    unsigned long e2 = u == 0 ? 0 : (unsigned long)d2 * F.log(u) % r_;
    t.push_back({(unsigned)((e1 + e2) % r_), 0, -1});
  }
  return t;
}

void GaussSumChecker::accumulate(std::vector<int64_t>& grid, const Terms& a,
                                 int sign) const {
  for (const auto& m : a) grid[(size_t)m.er * p_ + m.ep] += sign * m.w;
}

void GaussSumChecker::accumulate_product(std::vector<int64_t>& grid, const Terms& a,
                                         const Terms& b, int sign) const {
  for (const auto& x : a)
    for (const auto& y : b) {
      unsigned er = x.er + y.er;
      if (er >= r_) er -= r_;
      unsigned ep = x.ep + y.ep;
      if (ep >= p_) ep -= p_;
      grid[(size_t)er * p_ + ep] += sign * x.w * y.w;
    }
}

bool GaussSumChecker::grid_is_zero(std::vector<int64_t> grid) const {
  // Fold zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2}).
  for (unsigned i = 0; i < r_; ++i) {
    int64_t c = grid[(size_t)i * p_ + (p_ - 1)];
    if (c != 0) {
      for (unsigned j = 0; j + 1 < p_; ++j) grid[(size_t)i * p_ + j] -= c;
      grid[(size_t)i * p_ + (p_ - 1)] = 0;
    }
  }
  // Reduce each zeta_p-column (a degree < r_ polynomial in zeta_{q-1})
  // mod Phi_{q-1}, then require everything to vanish.
  const size_t dphi = phi_r_.size() - 1;
  std::vector<int64_t> col(r_);
  for (unsigned j = 0; j + 1 < p_; ++j) {
    for (unsigned i = 0; i < r_; ++i) col[i] = grid[(size_t)i * p_ + j];
    for (size_t i = r_; i-- > dphi;) {
      int64_t c = col[i];
      if (c == 0) continue;
      for (size_t k = 0; k < dphi; ++k) {
        int64_t prod;
        if (__builtin_mul_overflow(c, phi_r_[k], &prod) ||
            __builtin_sub_overflow(col[i - dphi + k], prod, &col[i - dphi + k]))
          throw std::overflow_error("GaussSumChecker: coefficient overflow");
      }
      col[i] = 0;
    }
    for (size_t i = 0; i < dphi; ++i)
      if (col[i] != 0) return false;
  }
  return true;
}

bool GaussSumChecker::check_modulus_squared(unsigned d) const {
  std::vector<int64_t> grid((size_t)r_ * p_, 0);
  Terms g = gauss_terms(d);
  accumulate_product(grid, g, conj_terms(g), +1);
  grid[0] -= (int64_t)field_->q();
  return grid_is_zero(std::move(grid));
}

bool GaussSumChecker::check_conjugation(unsigned d) const {
  std::vector<int64_t> grid((size_t)r_ * p_, 0);
  Terms g = gauss_terms(d);
  accumulate(grid, conj_terms(g), +1);
  Terms ginv = gauss_terms(d == 0 ? 0 : r_ - d);
  MultCharacter chi{field_, d};
  accumulate(grid, ginv, -chi.sign_at_minus_one());
  return grid_is_zero(std::move(grid));
}

bool GaussSumChecker::check_factorization(unsigned d1, unsigned d2) const {
  std::vector<int64_t> grid((size_t)r_ * p_, 0);
  accumulate_product(grid, gauss_terms(d1), gauss_terms(d2), +1);
  accumulate_product(grid, gauss_terms((unsigned)(((unsigned long)d1 + d2) % r_)),
                     jacobi_terms(d1, d2), -1);
  return grid_is_zero(std::move(grid));
}

bool GaussSumChecker::check_frobenius_shift(unsigned b) const {
  std::vector<int64_t> grid((size_t)r_ * p_, 0);
  // omega has exponent q-2 = -1 mod (q-1); omega^b has exponent -b.
  auto dexp = [&](unsigned long e) { return (unsigned)((r_ - e % r_) % r_); };
  accumulate(grid, gauss_terms(dexp(b)), +1);
  accumulate(grid, gauss_terms(dexp((unsigned long)b * p_)), -1);
  return grid_is_zero(std::move(grid));
}

std::vector<IdentityReport> GaussSumChecker::run_suite() const {
  std::vector<IdentityReport> out;
  auto add = [&](const char* id, unsigned a, unsigned b, bool pass) {
    IdentityReport r;
    r.identity = id;
    std::ostringstream ps;
    ps << "q=" << field_->q() << " d1=" << a;
    if (b != (unsigned)-1) ps << " d2=" << b;
    r.parameters = ps.str();
    r.pass = pass;
    r.lhs = r.rhs = pass ? "equal" : "UNEQUAL";
    out.push_back(std::move(r));
  };
  for (unsigned d = 1; d < r_; ++d) {
    add("|G(chi)|^2 = q", d, -1, check_modulus_squared(d));
    add("conj(G(chi)) = chi(-1) G(chi^-1)", d, -1, check_conjugation(d));
  }
  for (unsigned d1 = 1; d1 < r_; ++d1)
    for (unsigned d2 = 1; d2 < r_; ++d2) {
      if ((d1 + d2) % r_ == 0) continue;
      add("G(chi1)G(chi2) = G(chi1 chi2) J(chi1, chi2)", d1, d2,
          check_factorization(d1, d2));
    }
  for (unsigned b = 0; b < r_; ++b)
    add("G(omega^{bp}) = G(omega^b)", b, -1, check_frobenius_shift(b));
  return out;
}

}  // namespace catalan
