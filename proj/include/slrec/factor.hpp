#pragma once

// Integer factorization (trial division + Miller-Rabin + Pollard rho for
// stray large cofactors) and multiplicative orders of residues.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "slrec/numeric.hpp"

namespace slrec {

struct Factorization {
  int sign = 1;  // +1 or -1
  std::vector<std::pair<Int, long>> factors;  // (prime, exponent), primes increasing

  Int reconstruct() const {
    Int r = sign;
    for (const auto& [p, e] : factors) r *= pow(p, static_cast<unsigned long>(e));
    return r;
  }
};

// Deterministic for anything within reach of this artifact: BPSW-style via
// mpz_probab_prime_p with extra rounds.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

inline Int pollard_rho(const Int& n) {
  if (divides(Int(2), n)) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xb5ad4eceul);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x, c = rng.get_z_range(n - 1) + 1, d(1);
    while (d == 1) {
      x = mod_floor(x * x + c, n);
      y = mod_floor(y * y + c, n);
      y = mod_floor(y * y + c, n);
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(Int n, std::map<Int, long>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n]++;
    return;
  }
  for (long p = 2; p < 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (divides(Int(p), n)) {
      while (divides(Int(p), n)) {
        acc[Int(p)]++;
        n /= p;
      }
      if (n == 1) return;
      if (is_prime(n)) {
        acc[n]++;
        return;
      }
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n]++;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, acc);
  factor_into(n / d, acc);
}

}  // namespace detail

inline Factorization factorize(const Int& x) {
  if (is_zero(x)) throw std::domain_error("factorize(0)");
  Factorization f;
  f.sign = sgn(x) < 0 ? -1 : 1;
  std::map<Int, long> acc;
  detail::factor_into(abs(x), acc);
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

// Preperiod and period of the sequence (u^n mod modulus)_{n>=0}, with 0^0 = 1.
// For all n >= preperiod: u^(n+period) == u^n (mod modulus); both minimal.
struct OrderResult {
  long preperiod = 0;
  long period = 1;
};

inline OrderResult mult_order(const Int& u, const Int& modulus) {
  if (modulus < 2) throw std::domain_error("mult_order: modulus must be >= 2");
  std::map<Int, long> seen;
  Int x = mod_floor(Int(1), modulus);
  long i = 0;
  while (true) {
    auto it = seen.find(x);
    if (it != seen.end()) return {it->second, i - it->second};
    seen[x] = i;
    x = mod_floor(x * u, modulus);
    ++i;
  }
}

inline OrderResult mult_order(long u, long modulus) {
  return mult_order(Int(u), Int(modulus));
}

}  // namespace slrec
