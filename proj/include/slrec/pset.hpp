#pragma once

// Exact solution of mu^m = rho over m >= 0 (the P_{alpha,gamma,mu} sets):
// root-of-unity multipliers are scanned over one period; non-torsion
// multipliers admit at most one solution, located by valuations (rational
// case) or by an archimedean embedding hint followed by exact
// verification (cyclotomic case).

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "slrec/cyclotomic.hpp"
#include "slrec/epset.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

inline std::optional<long> torsion_order(const Rat& x) {
  if (x == 1) return 1;
  if (x == -1) return 2;
  return std::nullopt;
}
inline std::optional<long> torsion_order(const CycRat& x) {
  if (x.is_zero()) return std::nullopt;
  return x.root_of_unity_order();
}

inline double numeric_abs(const Rat& x, long /*embedding*/ = 1) {
  return std::fabs(x.get_d());
}
inline double numeric_abs(const CycRat& x, long embedding = 1) {
  long n = x.conductor();
  std::complex<double> z = std::polar(1.0, 2.0 * M_PI * embedding / n);
  std::complex<double> acc = 0.0, pw = 1.0;
  for (const Rat& c : x.coeffs()) {
    acc += c.get_d() * pw;
    pw *= z;
  }
  return std::abs(acc);
}

inline Rat field_pow(const Rat& b, long e) { return pow(b, e); }
inline CycRat field_pow(const CycRat& b, long e) { return b.pow(e); }

namespace detail {

inline std::optional<long> nontorsion_candidate(const Rat& mu, const Rat& rho) {
  Int nd = num(mu) * den(mu);
  Factorization f = factorize(nd);
  for (const auto& [p, e] : f.factors) {
    long vm = nu_p(mu, p);
    if (vm == 0) continue;
    long vr = nu_p(rho, p);
    if (vr % vm != 0) return std::nullopt;
    return vr / vm;
  }
  return std::nullopt;  // mu = +-1 never reaches here (torsion)
}

inline std::optional<long> nontorsion_candidate(const CycRat& mu, const CycRat& rho) {
  if (mu.is_rational() && rho.is_rational())
    return nontorsion_candidate(mu.rational_value(), rho.rational_value());
  long n = std::max(mu.conductor(), rho.conductor());
  double best = 0;
  long bestj = 1;
  for (long j = 1; j <= n; ++j) {
    if (n > 1 && to_long(gcd(Int(j), Int(n))) != 1) continue;
    double am = numeric_abs(mu.lifted(n), j);
    if (std::fabs(std::log(am)) > best) {
      best = std::fabs(std::log(am));
      bestj = j;
    }
  }
  if (best < 1e-9) return std::nullopt;  // all embeddings on the circle: torsion, handled earlier
  double ar = numeric_abs(rho.lifted(n), bestj);
  if (ar <= 0) return std::nullopt;
  double m = std::log(ar) / std::log(numeric_abs(mu.lifted(n), bestj));
  return std::lround(m);
}

}  // namespace detail

// {m >= 0 : mu^m == rho}, with 0^0 = 1
template <class F>
EPSet1 power_solve(const F& mu, const F& rho) {
  F one = field_pow(mu, 0);
  if (is_zero(mu)) {
    EPSet1 out;
    if (rho == one) out = set_union(out, EPSet1::singleton(0));
    if (is_zero(rho)) out = set_union(out, EPSet1::progression(1, 1));
    return out;
  }
  if (is_zero(rho)) return EPSet1::empty_set();
  if (auto s = torsion_order(mu)) {
    F p = one;
    for (long j = 0; j < *s; ++j) {
      if (p == rho) return EPSet1::progression(j, *s);
      p = p * mu;
    }
    return EPSet1::empty_set();
  }
  // non-torsion: at most one solution
  for (long m = 0; m <= 64; ++m)
    if (field_pow(mu, m) == rho) return EPSet1::singleton(m);
  if (auto c = detail::nontorsion_candidate(mu, rho)) {
    for (long m = std::max(0L, *c - 2); m <= *c + 2; ++m)
      if (m > 64 && field_pow(mu, m) == rho) return EPSet1::singleton(m);
  }
  return EPSet1::empty_set();
}

}  // namespace slrec
