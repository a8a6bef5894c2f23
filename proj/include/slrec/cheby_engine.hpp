#pragma once

// Chebyshev engine: f = e1*T_r, g = e2*T_s, c = e3*T_t lift through
// pi(z) = z + 1/z to sign equations lambda^(r^m - eta*t) = +-1, decided by
// the lemma-4.1 divisibility. The region beyond (m0, n0) collapses per
// parity class to empty-or-full (the V dichotomy); the finitely many rows
// and columns below the thresholds are eventually periodic with modulus
// computable from multiplicative orders of s (resp. r) modulo 2|r^m - +-t|.

#include <stdexcept>
#include <vector>

#include "slrec/factor.hpp"
#include "slrec/lemma41.hpp"
#include "slrec/linset.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

struct ChebSpec {
  long r = 2, s = 2, t = 1;
  int eps1 = 1, eps2 = 1, eps3 = 1;
};

struct VClassification {
  bool full = false;
  long m0 = 1, n0 = 1;
};

namespace detail {

// minimal m >= 1 with r^m > t and mu_r*(mu_r*m - mu_t - 2) >= 0
inline long v_threshold(long r, long t) {
  long mu_r = nu_p(Int(r), Int(2));
  long mu_t = nu_p(Int(t), Int(2));
  long m = 1;
  while (true) {
    bool pow_ok = pow(Int(r), static_cast<unsigned long>(m)) > t;
    bool val_ok = mu_r * (mu_r * m - mu_t - 2) >= 0;
    if (pow_ok && val_ok) return m;
    ++m;
  }
}

inline int cheby_sign_exp(long r, int eps, long m) {
  if (m == 0) return 1;
  long sigma = (r % 2 != 0) ? (m % 2) : 1;
  return sigma % 2 ? eps : 1;
}

}  // namespace detail

// the empty-or-full dichotomy for V(r,s,t,e1,e2) on Z_{>=m0} x Z_{>=n0}
inline VClassification V_classify(long r, long s, long t, int e1, int e2) {
  if (r < 2 || s < 2 || t < 1) throw std::domain_error("V_classify: r,s >= 2, t >= 1");
  VClassification v;
  v.m0 = detail::v_threshold(r, t);
  v.n0 = detail::v_threshold(s, t);
  bool re = r % 2 == 0, se = s % 2 == 0, te = t % 2 == 0;
  if (e1 == 1 && e2 == 1) {
    v.full = true;
  } else if (e1 == 1 && e2 == -1) {
    if (re != te)
      v.full = false;
    else if (re && te)
      v.full = !se;
    else
      v.full = true;
  } else if (e1 == -1 && e2 == 1) {
    if (se != te)
      v.full = false;
    else if (se && te)
      v.full = !re;
    else
      v.full = true;
  } else {
    v.full = (re == se);
  }
  return v;
}

// membership formula for all (m, n) >= 0
inline bool cheby_membership(const ChebSpec& c, long m, long n) {
  if (m < 0 || n < 0) return false;
  long alpha = (c.eps3 * detail::cheby_sign_exp(c.r, c.eps1, m)) < 0 ? 1 : 0;
  long beta = (c.eps3 * detail::cheby_sign_exp(c.s, c.eps2, n)) < 0 ? 1 : 0;
  Int rm = pow(Int(c.r), static_cast<unsigned long>(m));
  Int sn = pow(Int(c.s), static_cast<unsigned long>(n));
  for (int eta : {1, -1})
    for (int kappa : {1, -1})
      if (torsion_exists_formula(rm - eta * c.t, alpha, sn - kappa * c.t, beta, 2))
        return true;
  return false;
}

inline SemiLin2 chebyshev_engine(const ChebSpec& c) {
  if (c.r < 2 || c.s < 2 || c.t < 1)
    throw std::domain_error("chebyshev_engine: r,s >= 2, t >= 1");
  long m0 = detail::v_threshold(c.r, c.t);
  long n0 = detail::v_threshold(c.s, c.t);
  SemiLin2 out;

  // row/column period data: condition at fixed m depends on n through the
  // parity of n and s^n mod 2|r^m - eta*t|, once s^n has cleared t
  auto line_epset = [](long fixed_r, long other_s, long t,
                       const std::function<bool(long)>& pred, long fixed_i) {
    long L = 2, T = 1;
    for (int eta : {1, -1}) {
      Int A = pow(Int(fixed_r), static_cast<unsigned long>(fixed_i)) - eta * t;
      if (is_zero(A)) continue;
      OrderResult ord = mult_order(Int(other_s), 2 * abs(A));
      L = lcm(L, ord.period);
      T = std::max(T, ord.preperiod);
    }
    long clear = 1;
    while (!(pow(Int(other_s), static_cast<unsigned long>(clear)) > t)) ++clear;
    T = std::max(T, clear + 1);
    return EPSet1::from_predicate(pred, L, T);
  };

  for (long m = 0; m < m0; ++m) {
    EPSet1 row = line_epset(c.r, c.s, c.t,
                            [&](long n) { return cheby_membership(c, m, n); }, m);
    for (long e : row.exceptions()) out.sporadic.push_back({m, e});
    for (long r : row.residues())
      out.components.push_back(LinSet({m, row.threshold() + r}, {{0, row.period()}}));
  }
  for (long n = 0; n < n0; ++n) {
    EPSet1 col = line_epset(c.s, c.r, c.t,
                            [&](long m) { return cheby_membership(c, m, n); }, n);
    for (long e : col.exceptions()) out.sporadic.push_back({e, n});
    for (long r : col.residues())
      out.components.push_back(LinSet({col.threshold() + r, n}, {{col.period(), 0}}));
  }

  for (long j1 : {0, 1})
    for (long j2 : {0, 1}) {
      long bm = m0 + mod_floor(j1 - m0, 2);
      long bn = n0 + mod_floor(j2 - n0, 2);
      int e1j = c.eps3 * detail::cheby_sign_exp(c.r, c.eps1, bm);
      int e2j = c.eps3 * detail::cheby_sign_exp(c.s, c.eps2, bn);
      VClassification v = V_classify(c.r, c.s, c.t, e1j, e2j);
      if (!v.full) continue;
      out.components.push_back(LinSet({bm, bn}, {{2, 0}, {0, 2}}));
    }
  out.normalize();

  // the engine never hands back an unverified set
  for (long m = 0; m < m0 + 8; ++m)
    for (long n = 0; n < n0 + 8; ++n)
      if (out.member(m, n) != cheby_membership(c, m, n))
        throw std::logic_error("chebyshev_engine: verification failed at (" +
                               std::to_string(m) + "," + std::to_string(n) + ")");
  return out;
}

}  // namespace slrec
