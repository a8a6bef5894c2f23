#pragma once

// The divisibility criterion for simultaneous root-of-unity power
// equations, and the small solvability helper engines build on. This is
// the closed-form route; the torsion oracle solves the same systems by
// independent congruence arithmetic.

#include <stdexcept>

#include "slrec/numeric.hpp"

namespace slrec {

// Criterion: exists lambda in C^x with lambda^(d1^m - d3) = xi^a and
// lambda^(d2^n - d4) = xi^b  <=>  k*gcd(|d1^m-d3|, |d2^n-d4|) divides
// b*(d1^m-d3) - a*(d2^n-d4). Valid under |d1|^m > |d3| and |d2|^n > |d4|.
inline bool lemma41_check(long k, long a, long b, const Int& d1, const Int& d2,
                          const Int& d3, const Int& d4, long m, long n) {
  if (abs(d1) < 2 || abs(d2) < 2)
    throw std::domain_error("lemma41_check: |d1|, |d2| must be >= 2");
  Int A = pow(d1, static_cast<unsigned long>(m)) - d3;
  Int B = pow(d2, static_cast<unsigned long>(n)) - d4;
  if (!(pow(abs(d1), static_cast<unsigned long>(m)) > abs(d3)) ||
      !(pow(abs(d2), static_cast<unsigned long>(n)) > abs(d4)))
    throw std::domain_error("lemma41_check: preconditions |d1|^m > |d3|, |d2|^n > |d4|");
  Int lhs = Int(k) * gcd(abs(A), abs(B));
  Int rhs = Int(b) * A - Int(a) * B;
  return divides(lhs, rhs);
}

// Same criterion on raw exponents, with the A = 0 / B = 0 edge cases the
// engines need (lambda^0 = 1 forces the right side to be trivial).
inline bool torsion_exists_formula(const Int& A, long a, const Int& B, long b, long k) {
  long ar = mod_floor(a, k), br = mod_floor(b, k);
  if (is_zero(A) && is_zero(B)) return ar == 0 && br == 0;
  if (is_zero(A)) return ar == 0;
  if (is_zero(B)) return br == 0;
  Int lhs = Int(k) * gcd(abs(A), abs(B));
  Int rhs = Int(br) * A - Int(ar) * B;
  return divides(lhs, rhs);
}

}  // namespace slrec
