#pragma once

// 2-adic lifting-the-exponent: nu_2(x^n -+ y^n) for odd x, y from nu_2 of
// x - y, x + y, and n.

#include <stdexcept>

#include "slrec/numeric.hpp"

namespace slrec {

// sign_minus = true computes nu_2(x^n - y^n), false computes nu_2(x^n + y^n)
inline long lte_nu2(const Int& x, const Int& y, long n, bool sign_minus) {
  if (mpz_even_p(x.get_mpz_t()) || mpz_even_p(y.get_mpz_t()))
    throw std::domain_error("lte_nu2: x and y must be odd");
  if (n < 1) throw std::domain_error("lte_nu2: n >= 1");
  bool even = n % 2 == 0;
  if (sign_minus) {
    if (x == y || (even && x == -y))
      throw std::domain_error("lte_nu2: valuation of zero");
    if (even) return nu_p(Int(n), Int(2)) + nu_p(Int(x - y), Int(2)) + nu_p(Int(x + y), Int(2)) - 1;
    return nu_p(Int(x - y), Int(2));
  }
  if (even) return 1;
  if (x == -y) throw std::domain_error("lte_nu2: valuation of zero");
  return nu_p(Int(x + y), Int(2));
}

}  // namespace slrec
