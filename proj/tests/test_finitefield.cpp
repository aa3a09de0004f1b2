#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalan/finitefield.hpp"

using namespace catalan;

TEST_CASE("deterministic construction") {
  auto F3 = FqField::build(3, 1);
  CHECK(F3->modulus() == std::vector<unsigned>{0});  // x
  CHECK(F3->generator() == 2);

  auto F9 = FqField::build(3, 2);
  CHECK(F9->modulus() == std::vector<unsigned>{1, 0});  // x^2 + 1
  CHECK(F9->q() == 9);

  auto F7 = FqField::build(7, 1);
  CHECK(F7->generator() == 3);

  CHECK_THROWS_AS(FqField::build(6, 1), std::invalid_argument);
}

TEST_CASE("generator order across small fields") {
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {2, 3}, {2, 5}, {3, 1}, {3, 2}, {3, 4}, {5, 2}, {7, 3}, {19, 1}}) {
    auto F = FqField::build(p, f);
    CHECK(F->mult_order(F->generator()) == F->q() - 1);
    // Frobenius is additive + multiplicative bijection preserving trace
    std::vector<bool> seen(F->q(), false);
    for (unsigned a = 0; a < F->q(); ++a) {
      unsigned fa = F->pow(a, p);
      CHECK_FALSE(seen[fa]);
      seen[fa] = true;
      CHECK(F->trace(fa) == F->trace(a));
      for (unsigned b = a; b < F->q(); b += 7) {
        CHECK(F->pow(F->add(a, b), p) == F->add(fa, F->pow(b, p)));
        CHECK(F->pow(F->mul(a, b), p) == F->mul(fa, F->pow(b, p)));
      }
    }
  }
}

TEST_CASE("trace") {
  auto F9 = FqField::build(3, 2);
  // x with x^2 = -1: trace(x) = x + x^3 = x - x = 0
  unsigned x = F9->encode({0, 1});
  CHECK(F9->trace(x) == 0);
  CHECK(F9->trace(0) == 0);
  // constants: f*c mod p
  for (unsigned c = 0; c < 3; ++c) CHECK(F9->trace(c) == (2 * c) % 3);
  // additivity
  for (unsigned a = 0; a < 9; ++a)
    for (unsigned b = 0; b < 9; ++b)
      CHECK(F9->trace(F9->add(a, b)) == (F9->trace(a) + F9->trace(b)) % 3);
}

TEST_CASE("discrete log") {
  auto F7 = FqField::build(7, 1);
  CHECK(discrete_log({F7, F7->generator()}) == 1);
  CHECK(discrete_log({F7, 1}) == 0);
  CHECK(discrete_log({F7, 6}) == 3);  // 3^3 = 27 = 6 mod 7
  CHECK_THROWS_AS(discrete_log({F7, 0}), std::domain_error);
}

TEST_CASE("character evaluation") {
  auto F7 = FqField::build(7, 1);
  MultCharacter triv{F7, 0};
  for (unsigned x = 1; x < 7; ++x)
    CHECK(char_eval(triv, {F7, x}) == CycRat::one(6));
  CHECK(char_eval(triv, {F7, 0}) == CycRat::one(6));
  MultCharacter chi{F7, 2};
  CHECK(char_eval(chi, {F7, 0}) == CycRat::zero(6));
  // multiplicative on F*
  for (unsigned a = 1; a < 7; ++a)
    for (unsigned b = 1; b < 7; ++b)
      CHECK(char_eval(chi, {F7, F7->mul(a, b)}) ==
            char_eval(chi, {F7, a}) * char_eval(chi, {F7, b}));
}

TEST_CASE("character orthogonality and group law") {
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{
           {3, 1}, {5, 1}, {7, 1}, {2, 4}, {3, 2}, {11, 1}, {5, 2}, {2, 6}, {127, 1}}) {
    auto F = FqField::build(p, f);
    unsigned r = F->q() - 1;
    for (unsigned d = 1; d < r; ++d) {
      MultCharacter chi{F, d};
      CycRat sum = CycRat::zero(r);
      for (unsigned x = 1; x < F->q(); ++x) sum = sum + char_eval(chi, {F, x});
      CHECK(sum.is_zero());
    }
    // chi_{d1} chi_{d2} = chi_{d1+d2}
    for (unsigned d1 = 0; d1 < r; d1 += 5)
      for (unsigned d2 = 0; d2 < r; d2 += 7) {
        MultCharacter prod = MultCharacter{F, d1} * MultCharacter{F, d2};
        CHECK(prod.d == (d1 + d2) % r);
        for (unsigned x = 1; x < F->q(); x += 11)
          CHECK(char_eval(prod, {F, x}) ==
                char_eval({F, d1}, {F, x}) * char_eval({F, d2}, {F, x}));
      }
  }
}

TEST_CASE("additive character") {
  auto F8 = FqField::build(2, 3);
  CHECK(additive_char_exponent({F8, 0}) == 0);
  // sum over F of psi(t) = 0: counts of trace values are balanced
  int bal = 0;
  for (unsigned t = 0; t < 8; ++t) bal += F8->trace(t) == 0 ? 1 : -1;
  CHECK(bal == 0);
  auto F7 = FqField::build(7, 1);
  for (unsigned c = 0; c < 7; ++c) CHECK(additive_char_exponent({F7, c}) == c);
  // psi(s+t) = psi(s) psi(t): trace additivity
  for (unsigned s = 0; s < 8; ++s)
    for (unsigned t = 0; t < 8; ++t)
      CHECK(F8->trace(F8->add(s, t)) == (F8->trace(s) + F8->trace(t)) % 2);
}
