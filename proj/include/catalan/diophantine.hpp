#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "catalan/cyclotomic.hpp"

namespace catalan {

// p-adic valuation of n; kInfiniteValuation for n = 0.
long vp(const Int& n, const Int& p);

// v_p(n!), computed by both the floor-sum and the digit-sum formula (asserted equal).
Int vp_factorial(const Int& p, const Int& n);

struct BinomBoundReport {
  Int lhs;         // v_p(r!)
  Int rhs;         // v_p((m/n)(m/n - 1)...(m/n - r + 1)); meaningless if infinite
  bool rhs_infinite = false;
  bool pass = false;
};

// Lemma-2 style bound v_p(r!) <= v_p(prod_{j<r}(m/n - j)); requires p coprime to n.
BinomBoundReport binom_valuation_bound(const Int& p, const Int& m, const Int& n,
                                       unsigned long r);

struct PellSolution {
  Int D, x, y;
  unsigned long index = 1;
};

// Fundamental solution of x^2 - D y^2 = 1 by the continued fraction of sqrt(D).
PellSolution pell_fundamental(const Int& D);

// k-th power of the fundamental solution in Z[sqrt(D)].
PellSolution pell_power(const PellSolution& sol, unsigned long k);

// Indices k <= k_max such that every prime factor of y_k divides D.
std::vector<unsigned long> stoermer_scan(const Int& D, unsigned long k_max);

// gcd(x -+ y, (x^n -+ y^n)/(x -+ y)) = gcd(x -+ y, n); plus_sign selects x + y
// (n must then be odd). Requires gcd(x, y) = 1 and x -+ y != 0.
bool petit_lemme_check(const Int& x, const Int& y, unsigned long n, bool plus_sign);

// (a^q - b^q)/(a - b) = k(a - b) + q b^{q-1} with k = (a-b)^{q-2} + u b q;
// when q | a - b, additionally q exactly divides the quotient.
bool cassels_decomposition_check(const Int& a, const Int& b, unsigned long q);

// Primitive Pythagorean triple from c > d > 0, coprime, opposite parity.
std::tuple<Int, Int, Int> pythagorean_generate(const Int& c, const Int& d);

// The n representations 2^{2n} = A_k^2 - B_k^2, k = 1..n, pairwise distinct.
std::vector<std::pair<Int, Int>> power_gap_identity(unsigned n);

struct CatalanSolution {
  Int x, y;
  unsigned m = 0, n = 0;  // x^m - y^n = 1
};

// Exhaustive search for x^m - y^n = 1 with |x|, |y| in [2, x_max] and
// 2 <= m, n <= e_max; prime exponents by default.
std::vector<CatalanSolution> brute_catalan(const Int& x_max, unsigned e_max,
                                           bool prime_exponents_only = true);

struct WieferichReport {
  unsigned long p = 0, q = 0;
  unsigned long p_pow_mod_q2 = 0;  // p^{q-1} mod q^2
  unsigned long q_pow_mod_p2 = 0;  // q^{p-1} mod p^2
  bool first = false, second = false;
  bool pair() const { return first && second; }
};

WieferichReport wieferich_pair_check(unsigned long p, unsigned long q);

enum class Verdict {
  SmallPrime,      // min(p, q) <= 43
  WieferichFail,   // one of the double-Wieferich congruences fails
  BoundFail,       // p >= 4q^2 or q >= 4p^2
  CongruenceFail,  // neither p = 1 mod q nor q = 1 mod p
  ModQ2Cases,      // p = 1 + cq^2, c in {1,2,3}, killed by parity / mod 3
};

const char* verdict_name(Verdict v);

struct EliminationVerdict {
  unsigned long p = 0, q = 0;
  Verdict verdict{};
  std::string witness;
};

// First decisive exclusion for the pair (p, q), in proof order. Total on
// distinct odd primes.
EliminationVerdict eliminate_pair(unsigned long p, unsigned long q);

// If x = 1 mod q and x^{q-1} = 1 mod q^2 then x = 1 mod q^2 (the order of x
// mod q^2 divides both q and q-1). Returns whether the hypotheses hold;
// throws if they hold but the conclusion fails.
bool strengthen_mod_q2(const Int& x, unsigned long q);

// |{lambda in N^k : sum <= s}| = C(s+k, k); also the growth inequality
// 3 C(s+k, k) > 4(s+1)k^2 + 3 when s >= 6, k >= 2, s + 2k >= 13.
bool combinatorial_count_check(unsigned s, unsigned k);

}  // namespace catalan
