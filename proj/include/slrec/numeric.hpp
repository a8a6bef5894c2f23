#pragma once

// Exact numeric substrate: arbitrary-precision integers and rationals
// (GMP-backed) plus the small number-theory helpers everything else
// builds on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slrec {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  Int r = lcm(Int(a), Int(b));
  if (!r.fits_slong_p()) throw std::overflow_error("lcm overflow");
  return r.get_si();
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool neg = e < 0;
  unsigned long ue = neg ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  if (neg) {
    if (is_zero(b)) throw std::domain_error("0^negative");
    b = 1 / b;
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), ue);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), ue);
  r.canonicalize();
  return r;
}

// base^e mod m, m >= 1
inline Int powmod(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& x) {
  if (is_zero(d)) return is_zero(x);
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("Int does not fit in long: " + x.get_str());
  return x.get_si();
}

// p-adic valuation of a nonzero integer
inline long nu_p(const Int& x, const Int& p) {
  if (is_zero(x)) throw std::domain_error("valuation of zero");
  Int q;
  return static_cast<long>(
      mpz_remove(q.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// p-adic valuation of a nonzero rational; additive on products
inline long nu_p(const Rat& x, const Int& p) {
  if (is_zero(x)) throw std::domain_error("valuation of zero");
  return nu_p(num(x), p) - nu_p(den(x), p);
}

inline long nu_p(long x, long p) { return nu_p(Int(x), Int(p)); }

}  // namespace slrec
