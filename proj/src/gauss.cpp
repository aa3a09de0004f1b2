#include "catalan/gauss.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace catalan {

namespace {

std::string show(const CycRat& x) {
  std::ostringstream os;
  os << "[" << x.order() << "]";
  for (const auto& c : x.coeffs()) os << " " << c.get_str();
  return os.str();
}

}  // namespace

CycRat gauss_sum(const FieldPtr& field, const MultCharacter& chi) {
  const auto& F = *field;
  const unsigned r = F.q() - 1, p = F.p();
  const unsigned n = r * p;
  // zeta_{q-1} = zeta_n^p, zeta_p = zeta_n^{q-1} (gcd(p, q-1) = 1).
  // Accumulate in Z[x]/(x^n - 1), reduce once.
  std::vector<Rat> acc(n, Rat(0));
  for (unsigned k = 0; k < r; ++k) {
    unsigned t = F.exp(k);
    unsigned long e =
        ((unsigned long)chi.d * k % r * p + (unsigned long)F.trace(t) * r) % n;
    acc[(size_t)e] -= 1;
  }
  return CycRat(n, std::move(acc));
}

CycRat jacobi_sum(const FieldPtr& field, const MultCharacter& chi1,
                  const MultCharacter& chi2) {
  const auto& F = *field;
  const unsigned r = F.q() - 1;
  std::vector<Rat> acc(r, Rat(0));
  for (unsigned t = 0; t < F.q(); ++t) {
    unsigned u = F.sub(1, t);
    // chi(0) = 0 unless chi trivial (then 1).
    bool z1 = (t == 0), z2 = (u == 0);
    if (z1 && !chi1.is_trivial()) continue;
    if (z2 && !chi2.is_trivial()) continue;
    unsigned long e1 = z1 ? 0 : (unsigned long)chi1.d * F.log(t) % r;
    unsigned long e2 = z2 ? 0 : (unsigned long)chi2.d * F.log(u) % r;
    acc[(e1 + e2) % r] -= 1;
  }
  return CycRat(r, std::move(acc));
}

IdentityReport gauss_conjugate_check(const FieldPtr& field, const MultCharacter& chi) {
  if (chi.is_trivial())
    throw std::invalid_argument("gauss_conjugate_check: chi must be nontrivial");
  CycRat lhs = gauss_sum(field, chi).conj();
  CycRat rhs = gauss_sum(field, chi.inverse_char()) *
               Rat(chi.sign_at_minus_one());
  IdentityReport rep;
  rep.identity = "conj(G(chi)) = chi(-1) G(chi^-1)";
  std::ostringstream ps;
  ps << "q=" << field->q() << " d=" << chi.d;
  rep.parameters = ps.str();
  rep.pass = (lhs == rhs);
  rep.lhs = show(lhs);
  rep.rhs = show(rhs);
  return rep;
}

CycRat gauss_power_in_subfield(const FieldPtr& field, const MultCharacter& chi) {
  const unsigned m = chi.order();
  if (m < 2)
    throw std::invalid_argument("gauss_power_in_subfield: chi must be nontrivial");
  CycRat g = gauss_sum(field, chi);
  CycRat direct = g.pow(m).embed(m);  // throws if not in Q(zeta_m)

  // q * chi(-1) * J(chi,chi) J(chi,chi^2) ... J(chi,chi^{m-2}) in Q(zeta_m).
  const unsigned r = field->q() - 1;
  CycRat prod = CycRat::from_rational(Rat((long)field->q()) *
                                          Rat(chi.sign_at_minus_one()),
                                      r);
  MultCharacter power = chi;
  for (unsigned k = 1; k + 1 < m; ++k) {
    prod = prod * jacobi_sum(field, chi, power);
    power = power * chi;
  }
  CycRat via_jacobi = prod.embed(m);
  if (direct != via_jacobi)
    throw std::logic_error("gauss_power_in_subfield: computation paths disagree");
  return direct;
}

CycRat residue_symbol(const FieldPtr& field, const FqElt& x, unsigned m) {
  const unsigned r = field->q() - 1;
  if (m == 0 || r % m != 0)
    throw std::invalid_argument("residue_symbol: m does not divide q-1");
  if (x.idx == 0) return CycRat::zero(m);
  return CycRat::root_of_unity(m, (long)(field->log(x.idx) % m));
}

IdentityReport root_of_unity_injectivity_check(const FieldPtr& field, unsigned m) {
  const unsigned r = field->q() - 1;
  if (m == 0 || r % m != 0)
    throw std::invalid_argument("root_of_unity_injectivity_check: m must divide q-1");
  IdentityReport rep;
  rep.identity = "m-th roots of unity inject into F_q";
  std::ostringstream ps;
  ps << "q=" << field->q() << " m=" << m;
  rep.parameters = ps.str();
  std::vector<unsigned> roots;
  for (unsigned k = 0; k < m; ++k)
    roots.push_back(field->exp((unsigned long)k * (r / m)));
  std::sort(roots.begin(), roots.end());
  rep.pass = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
  rep.lhs = std::to_string(m);
  rep.rhs = std::to_string(std::unique(roots.begin(), roots.end()) - roots.begin());
  return rep;
}

}  // namespace catalan
