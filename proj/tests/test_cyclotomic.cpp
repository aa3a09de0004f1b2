#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalan/cyclotomic.hpp"

using namespace catalan;

namespace {

// Independent oracle: Phi_n from its roots over Z[x] is impractical exactly,
// so cross-check the defining product identity instead.
IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(c));
}

CycRat random_elt(unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> c(euler_phi(n));
  for (auto& x : c) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return CycRat(n, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly({Int(-1), Int(1)}));
  // Phi_7 = x^6 + ... + 1
  IntPoly phi7 = cyclotomic_polynomial(7);
  CHECK(phi7.degree() == 6);
  for (const auto& c : phi7.c) CHECK(c == 1);
  // Phi_12 = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(12) ==
        IntPoly({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
  // prod_{d|n} Phi_d = x^n - 1 for all n <= 60
  for (unsigned n = 1; n <= 60; ++n) {
    IntPoly prod({Int(1)});
    for (unsigned d : divisors(n)) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    CHECK(prod == IntPoly(std::move(xn)));
    CHECK(cyclotomic_polynomial(n).degree() == (long)euler_phi(n));
  }
}

TEST_CASE("ring operations") {
  // zeta_3 * zeta_3 = -1 - zeta_3
  CycRat z3 = CycRat::root_of_unity(3, 1);
  CHECK(z3 * z3 == CycRat(3, {Rat(-1), Rat(-1)}));
  // a * 1 = a
  CHECK(z3 * CycRat::one(3) == z3);
  // (1-zeta_5)(1-zeta_5^2)(1-zeta_5^3)(1-zeta_5^4) = 5
  CycRat prod = CycRat::one(5);
  for (int i = 1; i <= 4; ++i)
    prod = prod * (CycRat::one(5) - CycRat::root_of_unity(5, i));
  CHECK(prod == CycRat::from_rational(Rat(5), 5));
  // order mismatch rejected
  CHECK_THROWS_AS(z3 * CycRat::one(5), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 30; ++it) {
    unsigned n = std::vector<unsigned>{3, 5, 8, 12, 15}[it % 5];
    CycRat a = random_elt(n, rng), b = random_elt(n, rng), c = random_elt(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("inversion") {
  CHECK(CycRat::one(7).inverse() == CycRat::one(7));
  // 1/(1-zeta_3) = (2+zeta_3)/3
  CycRat x = CycRat::one(3) - CycRat::root_of_unity(3, 1);
  CHECK(x.inverse() == CycRat(3, {Rat(2, 3), Rat(1, 3)}));
  // zeta_n^{-1} = zeta_n^{n-1}
  for (unsigned n : {4u, 5u, 12u})
    CHECK(CycRat::root_of_unity(n, 1).inverse() == CycRat::root_of_unity(n, n - 1));
  CHECK_THROWS_AS(CycRat::zero(5).inverse(), std::domain_error);
  std::mt19937 rng(99);
  for (int it = 0; it < 10; ++it) {
    CycRat a = random_elt(7, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == CycRat::one(7));
  }
}

TEST_CASE("galois action") {
  std::mt19937 rng(7);
  CycRat a = random_elt(12, rng);
  CHECK(a.galois(1) == a);
  // sigma_{-1}(zeta_n) = zeta_n^{n-1}
  CHECK(CycRat::root_of_unity(12, 1).conj() == CycRat::root_of_unity(12, 11));
  // sigma_2(zeta_3) = -1 - zeta_3
  CHECK(CycRat::root_of_unity(3, 1).galois(2) == CycRat(3, {Rat(-1), Rat(-1)}));
  CHECK_THROWS_AS(a.galois(2), std::invalid_argument);
  // homomorphism, composition, fixing rationals
  for (unsigned n : {5u, 12u}) {
    CycRat x = random_elt(n, rng), y = random_elt(n, rng);
    for (unsigned t : units_mod(n)) {
      CHECK(x.galois(t) * y.galois(t) == (x * y).galois(t));
      CHECK(x.galois(t).galois(inv_mod(t, n)) == x);
    }
    CHECK(CycRat::from_rational(Rat(7, 3), n).galois((long)units_mod(n).back()) ==
          CycRat::from_rational(Rat(7, 3), n));
  }
}

TEST_CASE("norms") {
  CHECK(CycRat::from_rational(Rat(3), 5).norm() == Rat(81));
  for (unsigned p : {3u, 5u, 7u, 11u})
    CHECK((CycRat::one(p) - CycRat::root_of_unity(p, 1)).norm() == Rat((long)p));
  CHECK(CycRat::root_of_unity(12, 1).norm() == 1);
}

TEST_CASE("cyclotomic units (1-zeta^i)/(1-zeta) have norm 1") {
  for (unsigned p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    CycRat den = (CycRat::one(p) - CycRat::root_of_unity(p, 1)).inverse();
    for (unsigned i = 1; i < p; ++i) {
      CycRat u = (CycRat::one(p) - CycRat::root_of_unity(p, i)) * den;
      CHECK(u.norm() == 1);
    }
  }
}

TEST_CASE("embeddings") {
  // zeta_3 in Q(zeta_6): zeta_3 = zeta_6^2
  CycRat z3 = CycRat::root_of_unity(3, 1);
  CHECK(z3.embed(6) == CycRat::root_of_unity(6, 2));
  CHECK(CycRat::from_rational(Rat(5, 2), 4).embed(12).embed(4) ==
        CycRat::from_rational(Rat(5, 2), 4));
  std::mt19937 rng(3);
  for (int it = 0; it < 10; ++it) {
    CycRat a = random_elt(5, rng), b = random_elt(5, rng);
    CHECK(a.embed(15).embed(5) == a);
    CHECK(a.embed(15) * b.embed(15) == (a * b).embed(15));
  }
  // down-embedding of an element not in the subfield
  CHECK_THROWS_AS(CycRat::root_of_unity(12, 1).embed(4), std::domain_error);
}

TEST_CASE("cyclotomic unit xi_a") {
  // xi_{p-1} for p = 3 has integer coefficients
  CHECK(cyclotomic_unit_xi(3, 2).is_integral());
  // real and unit for various (p, a)
  for (unsigned p : {5u, 7u, 11u}) {
    for (unsigned a = 2; a < p; ++a) {
      CycRat xi = cyclotomic_unit_xi(p, a);
      CHECK(xi.is_integral());
      CHECK(xi.conj() == xi);
      Rat n = xi.norm();
      CHECK((n == 1 || n == -1));
    }
  }
  CHECK_THROWS_AS(cyclotomic_unit_xi(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_unit_xi(5, 6), std::invalid_argument);
}

TEST_CASE("kummer sum identity") {
  CHECK(kummer_sum_identity(3) == Rat(-2, 3));
  CHECK(kummer_sum_identity(5) == Rat(-2));
  CHECK(kummer_sum_identity(7) == Rat(-4));
  for (unsigned p = 3; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    Rat expect(1 - (long)p * p, 12);
    expect.canonicalize();
    CHECK(kummer_sum_identity(p) == expect);
  }
}
