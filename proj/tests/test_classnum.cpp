#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalan/classnum.hpp"

using namespace catalan;

TEST_CASE("primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(41) == 6);
  // order really is p-1
  for (unsigned p : {11u, 13u, 23u, 43u, 101u}) {
    unsigned g = primitive_root(p);
    unsigned long x = 1;
    unsigned order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    CHECK(order == p - 1);
  }
}

TEST_CASE("F_p polynomials") {
  CHECK(fp_polynomial(3) == IntPoly({Int(0), Int(2), Int(1)}));
  CHECK(fp_polynomial(5) == IntPoly({Int(0), Int(2), Int(4), Int(3), Int(1)}));
  CHECK(fp_polynomial(7) ==
        IntPoly({Int(0), Int(3), Int(2), Int(6), Int(4), Int(5), Int(1)}));
  // always monic of degree p-1 with coefficients in [1, p-1]
  for (unsigned p : {11u, 31u, 47u}) {
    IntPoly F = fp_polynomial(p);
    CHECK(F.degree() == static_cast<long>(p - 1));
    CHECK(F.c.back() == 1);
    for (unsigned i = 1; i < p; ++i) {
      CHECK(F.c[i] >= 1);
      CHECK(F.c[i] <= p - 1);
    }
  }
}

TEST_CASE("F_5 at i") {
  // intermediate value from the p = 5 worked example: F_5(i) = -3 - i
  IntPoly F = fp_polynomial(5);
  CycRat i = CycRat::root_of_unity(4, 1);
  CycRat val = CycRat::zero(4);
  for (long k = 4; k >= 0; --k) val = val * i + CycRat::from_rational(Rat(F.c[k]), 4);
  CHECK(val == -(CycRat::from_rational(3, 4) + i));
}

TEST_CASE("h_minus is 1 up to 19") {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
    INFO("p=", p);
    CHECK(h_minus(p) == 1);
  }
}

TEST_CASE("h_minus table") {
  CHECK(h_minus(23) == 3);
  CHECK(h_minus(29) == 8);
  CHECK(h_minus(31) == 9);
  CHECK(h_minus(37) == 37);
  CHECK(h_minus(41) == 121);
  CHECK(h_minus(43) == 211);
  CHECK(h_minus(47) == 695);
}

TEST_CASE("h_minus stretch values" * doctest::timeout(600)) {
  Int h139 = Int(9) * (Int(47) * 47) * (Int(277) * 277) * 967 * Int("1188961909");
  CHECK(h_minus(139) == h139);
  Int h211 = Int(9) * 49 * 41 * 71 * 181 * (Int(281) * 281) * 421 * 1051 * 12251 *
             Int("113981701") * Int("4343510221");
  CHECK(h_minus(211) == h211);
}
