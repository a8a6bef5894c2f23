#pragma once

// Closed-form engine for power maps f = z^d1, g = zeta z^d2, c a root of
// unity: row n = 0 from the order of c, and the interior from the
// congruence h(m,n) = 0 mod kQ where h is the lemma-4.1 combination
// divided by gcd(|d1^m|, |d2^n|), computed by modular exponentials per
// prime of d1*d2. The explicit set is assembled by synthesize and
// verified against the membership formula.

#include <vector>

#include "slrec/factor.hpp"
#include "slrec/linset.hpp"
#include "slrec/numeric.hpp"
#include "slrec/synth.hpp"

namespace slrec {

struct RootOfUnity {
  long num = 0;  // exp(2*pi*i*num/den)
  long den = 1;

  // reduced order and exponent: value = xi_order^exp with xi primitive
  long order() const {
    long g = to_long(gcd(Int(mod_floor(num, den)), Int(den)));
    return den / g;
  }
  long exponent_for(long k) const {  // exponent e with value = xi_k^e, order() | k
    long r = mod_floor(num, den);
    return mod_floor(r * (k / den), k);
  }
};

struct PowerSpec {
  Int d1, d2;        // |d| >= 2, negative allowed
  RootOfUnity zeta;  // twist on g
  RootOfUnity c;     // constant target

  long k() const { return lcm(zeta.order(), c.order()); }
  long a() const { return c.exponent_for(k()); }
  long e() const { return zeta.exponent_for(k()); }
};

namespace detail {

struct PowerData {
  long k, a, e;
  Int Q0, kQ;
  std::vector<Int> primes;
  std::vector<long> tau, mu;
  int sign1, sign2;
};

inline PowerData power_data(const PowerSpec& s) {
  if (abs(s.d1) < 2 || abs(s.d2) < 2)
    throw std::domain_error("power engine: |d1|, |d2| must be >= 2");
  PowerData d;
  d.k = s.k();
  d.a = s.a();
  d.e = s.e();
  d.Q0 = s.d2 - 1;
  d.kQ = Int(d.k) * abs(d.Q0);
  d.sign1 = sgn(s.d1) < 0 ? -1 : 1;
  d.sign2 = sgn(s.d2) < 0 ? -1 : 1;
  Factorization f = factorize(Int(s.d1 * s.d2));
  for (const auto& [p, e] : f.factors) {
    d.primes.push_back(p);
    d.tau.push_back(nu_p(s.d1, p));
    d.mu.push_back(nu_p(s.d2, p));
  }
  return d;
}

}  // namespace detail

// membership formula for the modified set S^2 with lambda != 0
inline bool power_membership(const PowerSpec& s, long m, long n) {
  if (m < 0 || n < 0) return false;
  detail::PowerData d = detail::power_data(s);
  if (n == 0) {
    // lambda = c: c^(d1^m - 1) = 1  <=>  k | a*(d1^m - 1)
    Int expo = pow(s.d1, static_cast<unsigned long>(m)) - 1;
    return is_zero(mod_floor(Int(d.a) * expo, Int(d.k)));
  }
  const Int& M = d.kQ;
  auto pm = [&](const Int& p, long ex) { return powmod(p, Int(ex), M); };
  Int prodJ = 1, prodNJ = 1, prodT = 1;
  for (size_t i = 0; i < d.primes.size(); ++i) {
    long em = d.tau[i] * m, en = d.mu[i] * n;
    if (em >= en) {
      prodJ = mod_floor(prodJ * pm(d.primes[i], em - en), M);
      prodT = mod_floor(prodT * pm(d.primes[i], em), M);
    } else {
      prodNJ = mod_floor(prodNJ * pm(d.primes[i], en - em), M);
      prodT = mod_floor(prodT * pm(d.primes[i], en), M);
    }
  }
  long s1 = (m % 2 == 1 && d.sign1 < 0) ? -1 : 1;
  long s2 = (n % 2 == 1 && d.sign2 < 0) ? -1 : 1;
  Int h = (Int(d.a) * d.Q0 + d.e) * s1 * prodJ - Int(d.a) * d.Q0 * s2 * prodNJ -
          Int(d.e) * s1 * s2 * prodT;
  return is_zero(mod_floor(h, M));
}

inline SemiLin2 power_engine(const PowerSpec& s) {
  detail::PowerData d = detail::power_data(s);
  SemiLin2 out;

  // row n = 0: d1^m = 1 mod k/gcd(a,k)
  {
    long g = to_long(gcd(Int(d.a), Int(d.k)));
    long kp = d.k / g;
    EPSet1 row0;
    if (kp == 1) {
      row0 = EPSet1::full_set();
    } else {
      OrderResult ord = mult_order(mod_floor(s.d1, Int(kp)), Int(kp));
      row0 = EPSet1::from_predicate(
          [&](long m) {
            return powmod(mod_floor(s.d1, Int(kp)), Int(m), Int(kp)) == 1 % Int(kp);
          },
          ord.period, ord.preperiod);
    }
    for (long e : row0.exceptions()) out.sporadic.push_back({e, 0});
    for (long r : row0.residues())
      out.components.push_back(
          LinSet({row0.threshold() + r, 0}, {{row0.period(), 0}}));
  }

  // interior n >= 1 via synthesis
  SynthSpec spec;
  long L = 2, pre = 1;
  for (const Int& p : d.primes) {
    OrderResult ord = mult_order(p, d.kQ);
    L = lcm(L, ord.period);
    pre = std::max(pre, ord.preperiod);
  }
  spec.L = L;
  spec.theta = pre + L + 1;
  for (size_t i = 0; i < d.primes.size(); ++i)
    if (d.tau[i] > 0 && d.mu[i] > 0) {
      long g = to_long(gcd(Int(d.mu[i]), Int(d.tau[i])));
      spec.dirs.push_back({d.mu[i] / g, d.tau[i] / g});
    }
  SemiLin2 interior = synthesize(
      [&](long m, long n) { return n >= 1 && power_membership(s, m, n); }, spec);

  out = set_union(out, interior);
  return out;
}

}  // namespace slrec
