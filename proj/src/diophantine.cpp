#include "catalan/diophantine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace catalan {

namespace {

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned long powmod_ul(unsigned long b, unsigned long e, unsigned long m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

Int exact_div(const Int& num, const Int& den, const char* what) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error(what);
  return q;
}

}  // namespace

long vp(const Int& n, const Int& p) {
  if (n == 0) return kInfiniteValuation;
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Int vp_factorial(const Int& p, const Int& n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Int floor_sum = 0, pk = p;
  while (pk <= n) {
    floor_sum += n / pk;
    pk *= p;
  }
  Int digit_sum = 0, rest = n;
  while (rest > 0) {
    digit_sum += rest % p;
    rest /= p;
  }
  Int legendre = exact_div(n - digit_sum, p - 1, "Legendre form not integral");
  if (legendre != floor_sum)
    throw std::logic_error("factorial valuation forms disagree");
  return floor_sum;
}

BinomBoundReport binom_valuation_bound(const Int& p, const Int& m, const Int& n,
                                       unsigned long r) {
  if (n == 0 || n % p == 0) throw std::invalid_argument("p must not divide n");
  BinomBoundReport rep;
  rep.lhs = vp_factorial(p, Int(static_cast<unsigned long>(r)));
  rep.rhs = 0;
  for (unsigned long j = 0; j < r; ++j) {
    Int term = m - Int(j) * n;  // vp(m/n - j) = vp(m - jn) since p coprime to n
    if (term == 0) {
      rep.rhs_infinite = true;
      break;
    }
    rep.rhs += vp(term, p);
  }
  rep.pass = rep.rhs_infinite || rep.lhs <= rep.rhs;
  return rep;
}

PellSolution pell_fundamental(const Int& D) {
  if (D <= 0) throw std::invalid_argument("D must be positive");
  Int a0 = sqrt(D);
  if (a0 * a0 == D) throw std::invalid_argument("D must not be a square");
  // continued fraction of sqrt(D); convergents until x^2 - D y^2 = 1
  Int m = 0, d = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  while (h * h - D * k * k != 1) {
    m = d * a - m;
    d = exact_div(D - m * m, d, "continued fraction invariant broken");
    a = (a0 + m) / d;
    Int h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  return {D, h, k, 1};
}

PellSolution pell_power(const PellSolution& sol, unsigned long k) {
  if (k == 0) throw std::invalid_argument("power must be positive");
  Int rx = 1, ry = 0, bx = sol.x, by = sol.y;
  unsigned long e = k;
  while (e) {
    if (e & 1) {
      Int nx = rx * bx + sol.D * ry * by;
      ry = rx * by + ry * bx;
      rx = nx;
    }
    Int sx = bx * bx + sol.D * by * by;
    by = 2 * bx * by;
    bx = sx;
    e >>= 1;
  }
  PellSolution out{sol.D, rx, ry, sol.index * k};
  if (out.x * out.x - out.D * out.y * out.y != 1)
    throw std::logic_error("pell power lost the defining equation");
  return out;
}

std::vector<unsigned long> stoermer_scan(const Int& D, unsigned long k_max) {
  PellSolution fund = pell_fundamental(D);
  std::vector<Int> d_primes;
  {
    Int rest = D;
    for (Int f = 2; f * f <= rest; ++f)
      if (rest % f == 0) {
        d_primes.push_back(f);
        while (rest % f == 0) rest /= f;
      }
    if (rest > 1) d_primes.push_back(rest);
  }
  std::vector<unsigned long> hits;
  PellSolution cur = fund;
  for (unsigned long k = 1; k <= k_max; ++k) {
    if (k > 1) {
      Int nx = cur.x * fund.x + D * cur.y * fund.y;
      cur.y = cur.x * fund.y + cur.y * fund.x;
      cur.x = nx;
      cur.index = k;
    }
    Int rest = cur.y;
    for (const Int& f : d_primes)
      while (rest % f == 0) rest /= f;
    if (rest == 1) hits.push_back(k);
  }
  return hits;
}

bool petit_lemme_check(const Int& x, const Int& y, unsigned long n, bool plus_sign) {
  if (gcd(x, y) != 1) throw std::invalid_argument("x and y must be coprime");
  if (plus_sign && n % 2 == 0) throw std::invalid_argument("n must be odd for +");
  if (n == 0) throw std::invalid_argument("n must be positive");
  Int s = plus_sign ? Int(x + y) : Int(x - y);
  if (s == 0) throw std::invalid_argument("x -+ y must be nonzero");
  Int sn = plus_sign ? Int(ipow(x, n) + ipow(y, n)) : Int(ipow(x, n) - ipow(y, n));
  Int quot = exact_div(sn, s, "x -+ y does not divide x^n -+ y^n");
  return gcd(s, quot) == gcd(s, Int(n));
}

bool cassels_decomposition_check(const Int& a, const Int& b, unsigned long q) {
  if (a == b) throw std::invalid_argument("a and b must differ");
  if (gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  Int d = a - b;
  Int S = exact_div(ipow(a, q) - ipow(b, q), d, "a - b must divide a^q - b^q");
  Int num = S - Int(static_cast<unsigned long>(q)) * ipow(b, q - 1);
  Int k, r;
  mpz_tdiv_qr(k.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  if (r != 0) return false;
  Int base = k - ipow(d, q - 2);
  if (b == 0) {
    if (base != 0) return false;
  } else {
    Int bq = b * Int(static_cast<unsigned long>(q)), rem;
    mpz_tdiv_r(rem.get_mpz_t(), base.get_mpz_t(), bq.get_mpz_t());
    if (rem != 0) return false;
  }
  if (q == 2 && k != 1) return false;
  // q exactly divides S when q | a - b; specific to odd q (for q = 2,
  // v_2(a + b) is unbounded).
  if (q != 2 && d % q == 0 &&
      vp(S, Int(static_cast<unsigned long>(q))) != 1)
    return false;
  return true;
}

std::tuple<Int, Int, Int> pythagorean_generate(const Int& c, const Int& d) {
  if (!(c > d && d > 0)) throw std::invalid_argument("need c > d > 0");
  if (gcd(c, d) != 1) throw std::invalid_argument("c and d must be coprime");
  if ((c + d) % 2 == 0) throw std::invalid_argument("c and d must have opposite parity");
  Int x = c * c - d * d, y = 2 * c * d, z = c * c + d * d;
  if (x * x + y * y != z * z) throw std::logic_error("triple identity failed");
  return {x, y, z};
}

std::vector<std::pair<Int, Int>> power_gap_identity(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  Int target = ipow(2, 2 * n);
  std::vector<std::pair<Int, Int>> reps;
  for (unsigned k = 1; k <= n; ++k) {
    Int hi = ipow(2, 2 * n - k - 1), lo = ipow(2, k - 1);
    Int A = hi + lo, B = hi - lo;
    if (A * A - B * B != target) throw std::logic_error("representation failed");
    reps.emplace_back(A, B);
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i] == reps[j]) throw std::logic_error("representations collide");
  return reps;
}

std::vector<CatalanSolution> brute_catalan(const Int& x_max, unsigned e_max,
                                           bool prime_exponents_only) {
  if (x_max < 2 || e_max < 2) throw std::invalid_argument("bounds too small");
  std::vector<unsigned> exps;
  for (unsigned e = 2; e <= e_max; ++e)
    if (!prime_exponents_only || is_prime(e)) exps.push_back(e);

  std::vector<CatalanSolution> out;
  auto record = [&](const Int& x, const Int& y, unsigned m, unsigned n) {
    out.push_back({x, y, m, n});
    if (m % 2 == 0) out.push_back({-x, y, m, n});
    if (n % 2 == 0) out.push_back({x, -y, m, n});
    if (m % 2 == 0 && n % 2 == 0) out.push_back({-x, -y, m, n});
  };

  for (unsigned m : exps) {
    for (unsigned n : exps) {
      if (m == n) continue;  // consecutive equal powers differ by more than 1
      // candidate counts on each side of x^m = y^n + 1
      auto root_bound = [&](const Int& v, unsigned e) {
        Int r;
        mpz_root(r.get_mpz_t(), v.get_mpz_t(), e);
        return std::min(r, x_max);
      };
      Int bx = root_bound(ipow(x_max, n) + 1, m);
      Int by = root_bound(ipow(x_max, m) - 1, n);
      if (bx <= by) {
        for (Int x = 2; x <= bx; ++x) {
          Int v = ipow(x, m) - 1, y;
          if (mpz_root(y.get_mpz_t(), v.get_mpz_t(), n) && y >= 2 && y <= x_max)
            record(x, y, m, n);
        }
      } else {
        for (Int y = 2; y <= by; ++y) {
          Int v = ipow(y, n) + 1, x;
          if (mpz_root(x.get_mpz_t(), v.get_mpz_t(), m) && x >= 2 && x <= x_max)
            record(x, y, m, n);
        }
      }
    }
  }
  return out;
}

WieferichReport wieferich_pair_check(unsigned long p, unsigned long q) {
  if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("need distinct odd primes");
  WieferichReport rep;
  rep.p = p;
  rep.q = q;
  rep.p_pow_mod_q2 = powmod_ul(p, q - 1, q * q);
  rep.q_pow_mod_p2 = powmod_ul(q, p - 1, p * p);
  rep.first = rep.p_pow_mod_q2 == 1;
  rep.second = rep.q_pow_mod_p2 == 1;
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SmallPrime: return "small-prime";
    case Verdict::WieferichFail: return "wieferich-fail";
    case Verdict::BoundFail: return "bound-fail";
    case Verdict::CongruenceFail: return "congruence-fail";
    case Verdict::ModQ2Cases: return "mod-q2-cases";
  }
  return "unknown";
}

bool strengthen_mod_q2(const Int& x, unsigned long q) {
  Int q2 = Int(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q);
  Int r = x % q2;
  if (r < 0) r += q2;
  if (r % q != 1 % q) return false;
  Int pw;
  Int e(static_cast<unsigned long>(q - 1));
  mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), q2.get_mpz_t());
  if (pw != 1) return false;
  if (r != 1 % q2)
    throw std::logic_error("order argument violated: x not 1 mod q^2");
  return true;
}

EliminationVerdict eliminate_pair(unsigned long p, unsigned long q) {
  if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("need distinct odd primes");
  EliminationVerdict v;
  v.p = p;
  v.q = q;
  unsigned long lo = std::min(p, q);
  if (lo <= 43) {
    v.verdict = Verdict::SmallPrime;
    v.witness = "min(p,q) = " + std::to_string(lo) + " <= 43";
    return v;
  }
  WieferichReport w = wieferich_pair_check(p, q);
  if (!w.first || !w.second) {
    v.verdict = Verdict::WieferichFail;
    v.witness = !w.first ? "p^(q-1) mod q^2 = " + std::to_string(w.p_pow_mod_q2)
                         : "q^(p-1) mod p^2 = " + std::to_string(w.q_pow_mod_p2);
    return v;
  }
  if (!(Int(p) < 4 * Int(q) * q && Int(q) < 4 * Int(p) * p)) {
    v.verdict = Verdict::BoundFail;
    v.witness = (Int(p) >= 4 * Int(q) * q) ? "p >= 4q^2" : "q >= 4p^2";
    return v;
  }
  if (p % q != 1 && q % p != 1) {
    v.verdict = Verdict::CongruenceFail;
    v.witness = "p mod q = " + std::to_string(p % q) +
                ", q mod p = " + std::to_string(q % p);
    return v;
  }
  // a = 1 mod b; the surviving Wieferich congruence upgrades this to mod b^2
  unsigned long a = (p % q == 1) ? p : q;
  unsigned long b = (p % q == 1) ? q : p;
  if (!strengthen_mod_q2(Int(a), b))
    throw std::logic_error("strengthening hypotheses unexpectedly absent");
  unsigned long c = (a - 1) / (b * b);
  v.verdict = Verdict::ModQ2Cases;
  if (c == 1 || c == 3) {
    v.witness = "a = 1 + " + std::to_string(c) + "b^2 is even";
  } else if (c == 2) {
    // b != 3 here (else a = 19, caught by the small-prime step), so b^2 = 1
    // mod 3 and a = 1 + 2b^2 = 0 mod 3
    v.witness = "a = 1 + 2b^2 = 0 mod 3";
    if (a % 3 != 0) throw std::logic_error("mod 3 elimination failed");
  } else {
    throw std::logic_error("a - 1 = c b^2 with c outside {1,2,3}");
  }
  return v;
}

bool combinatorial_count_check(unsigned s, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  // enumerate tuples in N^k with coordinate sum <= s
  std::function<unsigned long(unsigned, unsigned)> count =
      [&](unsigned budget, unsigned slots) -> unsigned long {
    if (slots == 0) return 1;
    unsigned long total = 0;
    for (unsigned v = 0; v <= budget; ++v) total += count(budget - v, slots - 1);
    return total;
  };
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), s + k, k);
  if (binom != count(s, k)) return false;
  if (s >= 6 && k >= 2 && s + 2 * k >= 13) {
    if (!(3 * binom > Int(4) * (s + 1) * k * k + 3)) return false;
  }
  return true;
}

}  // namespace catalan
