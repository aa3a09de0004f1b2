#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalan/groupring.hpp"

using namespace catalan;

TEST_CASE("group ring basics") {
  GroupRingElt a(7);
  a.at(1) = 2;
  a.at(3) = Rat(1, 2);
  CHECK(gr_mul(a, GroupRingElt::sigma(7, 1)) == a);
  CHECK(gr_mul(GroupRingElt::sigma(7, 3), GroupRingElt::sigma(7, 5)) ==
        GroupRingElt::sigma(7, 15));
  CHECK(a.coeff_sum() == Rat(5, 2));
  CHECK((-a).norm1() == Rat(5, 2));
  CHECK_FALSE(a.is_integral());
  CHECK_THROWS_AS(a.at(14), std::invalid_argument);
}

TEST_CASE("alpha times s(G) collapses to the coefficient sum") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned m : {5u, 8u, 12u}) {
    GroupRingElt sG(m);
    for (unsigned t : sG.units()) sG.at(t) = 1;
    GroupRingElt a(m);
    for (unsigned t : a.units()) a.at(t) = coeff(rng);
    CHECK(gr_mul(a, sG) == sG * a.coeff_sum());
  }
}

TEST_CASE("theta") {
  GroupRingElt t3 = theta(3);
  CHECK(t3.at(1) == Rat(1, 3));
  CHECK(t3.at(2) == Rat(2, 3));
  for (unsigned m = 3; m <= 30; ++m) {
    CHECK(theta(m).coeff_sum() == Rat(euler_phi(m)) / 2);
    // m Theta = -Theta_{m+1}
    CHECK(theta(m) * Rat(m) == -theta_b(m, m + 1));
  }
}

TEST_CASE("theta_b") {
  CHECK(theta_b(9, 1).is_zero());
  GroupRingElt t52 = theta_b(5, 2);
  CHECK(t52 == -(GroupRingElt::sigma(5, 2) + GroupRingElt::sigma(5, 4)));

  // Theta_2 = -sum_{t=(p+1)/2}^{p-1} sigma_t^{-1} for odd primes
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    GroupRingElt expect(p);
    for (unsigned t = (p + 1) / 2; t < p; ++t) expect.at(inv_mod(t, p)) = -1;
    CHECK(theta_b(p, 2) == expect);
  }

  // Theta_b = (sigma_b - b) Theta, integral, for all moduli up to 60
  for (unsigned m = 3; m <= 60; ++m) {
    for (unsigned b : units_mod(m)) {
      GroupRingElt tb = theta_b(m, b);
      CHECK(tb.is_integral());
      CHECK(tb == gr_mul(GroupRingElt::sigma(m, b), theta(m)) - theta(m) * Rat(b));
    }
  }
}

TEST_CASE("stickelberger basis: lemma 11 shapes") {
  for (unsigned p = 3; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    auto B = stickelberger_basis(p);
    REQUIRE(B.f.size() == p - 1);
    GroupRingElt iota = GroupRingElt::sigma(p, -1);
    for (unsigned i = 1; i <= (p - 1) / 2; ++i) {
      const GroupRingElt& fi = B.f[i - 1];
      CHECK(fi.norm1() == Rat(p - 1) / 2);
      CHECK(fi == B.f[p - 1 - i - 1]);
      CHECK(fi + gr_mul(iota, fi) == B.sG);
      for (const Rat& c : fi.coeffs()) CHECK((c == 0 || c == 1));
    }
    CHECK(B.f[p - 2] == B.sG);
    std::vector<GroupRingElt> fplus(B.f.begin(), B.f.begin() + (p - 1) / 2);
    fplus.push_back(B.sG);
    CHECK(lattice_rank(fplus) == (p + 1) / 2);
    CHECK(lattice_rank(B.e) == (p - 1) / 2);
  }
}

TEST_CASE("lattice rank corner cases") {
  CHECK(lattice_rank({}) == 0);
  GroupRingElt a(5);
  a.at(1) = 1;
  a.at(2) = Rat(1, 3);
  CHECK(lattice_rank({a, a * Rat(7, 2), GroupRingElt(5)}) == 1);
}

TEST_CASE("exponential action") {
  CycRat x = CycRat::root_of_unity(7, 1) + CycRat::from_rational(2, 7);
  CHECK(act(GroupRingElt(7), x) == CycRat::one(7));
  CHECK(act(GroupRingElt::sigma(7, 3), x) == x.galois(3));

  GroupRingElt sG(7);
  for (unsigned t = 1; t < 7; ++t) sG.at(t) = 1;
  CHECK(act(sG, x) == CycRat::from_rational(x.norm(), 7));

  GroupRingElt th1(7), th2(7);
  th1.at(2) = 3;
  th1.at(5) = 1;
  th2.at(3) = 2;
  th2.at(6) = 1;
  CycRat y = CycRat::root_of_unity(7, 4) - CycRat::from_rational(Rat(1, 2), 7);
  // exponent addition and gr-multiplication compose correctly
  CHECK(act(th1 + th2, x) == act(th1, x) * act(th2, x));
  CHECK(act(gr_mul(th1, th2), x) == act(th1, act(th2, x)));
  CHECK(act(th1, x * y) == act(th1, x) * act(th1, y));

  GroupRingElt neg(7);
  neg.at(1) = -1;
  CHECK_THROWS_AS(act(neg, x), std::invalid_argument);
}

TEST_CASE("semisimplicity of x^n - 1 over F_q") {
  CHECK(semisimple_check(3, 4));
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
    for (unsigned n = 1; n <= 60; ++n) {
      INFO("q=", q, " n=", n);
      CHECK(semisimple_check(q, n) == (n % q != 0));
    }
  }
}

TEST_CASE("mihailescu series: trivial theta") {
  auto rep = mihailescu_series(5, 3, GroupRingElt(5), 6);
  CHECK(rep.pass());
  CHECK(rep.coeffs[0] == CycRat::one(5));
  for (unsigned k = 1; k <= 6; ++k) CHECK(rep.coeffs[k].is_zero());
}

TEST_CASE("mihailescu series: pinned case p=5 q=3") {
  GroupRingElt th(5);
  th.at(1) = 1;
  th.at(2) = 1;
  auto rep = mihailescu_series(5, 3, th, 6);
  CHECK(rep.pass());
  // a_1 = -sum n_t zeta^t exactly
  CHECK(rep.a[1] == -(CycRat::root_of_unity(5, 1) + CycRat::root_of_unity(5, 2)));
  CHECK(rep.a[0] == CycRat::one(5));
}

TEST_CASE("mihailescu series: random exponents") {
  std::mt19937 rng(20260826);
  for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {7, 3}, {5, 7}}) {
    std::uniform_int_distribution<unsigned> coeff(0, q);
    for (int trial = 0; trial < 3; ++trial) {
      GroupRingElt th(p);
      for (unsigned t : th.units()) th.at(t) = coeff(rng);
      auto rep = mihailescu_series(p, q, th, 8);
      INFO("p=", p, " q=", q, " trial=", trial);
      CHECK(rep.pass());
    }
  }
}
