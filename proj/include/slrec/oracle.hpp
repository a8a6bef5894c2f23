#pragma once

// Ground-truth brute-force windows. recurrence_window decides each cell by
// exact polynomial algebra (gcd after modular composition); affine_window
// evaluates the degree-one solvability conditions directly; torsion_window
// solves root-of-unity systems by congruence arithmetic on exponents, with
// no field elements materialized.

#include <string>
#include <vector>

#include "slrec/numeric.hpp"
#include "slrec/poly.hpp"
#include "slrec/window.hpp"

namespace slrec {

template <class F>
struct PolyTriple {
  Poly<F> f, g, c;
  bool exclude_zero = false;
  long degree_cap = kDefaultDegreeCap;
};

namespace detail {

// does p have a complex root, a nonzero one if exclude_zero
template <class F>
bool poly_has_root(const Poly<F>& p, bool exclude_zero) {
  if (p.is_zero()) return true;
  return p.degree() - (exclude_zero ? root_zero_multiplicity(p) : 0) >= 1;
}

}  // namespace detail

template <class F>
Window recurrence_window(const PolyTriple<F>& t, long M, long N) {
  if (t.f.is_constant() || t.g.is_constant())
    throw std::domain_error("recurrence_window: f and g must be nonconstant");
  Window w;
  w.M = M;
  w.N = N;
  w.provenance = "oracle:gcd";
  w.cells.assign(M, std::vector<char>(N, 0));

  const long df = t.f.degree(), dg = t.g.degree();
  Poly<F> fIter = Poly<F>::var();  // f^om
  bool f_capped = false;
  for (long m = 0; m < M; ++m) {
    if (m > 0) {
      if (Int(df) * fIter.degree() > t.degree_cap) f_capped = true;
      if (f_capped) {
        for (long n = 0; n < N; ++n)
          w.cell_errors.emplace_back(m, n, "degree cap exceeded on f-side");
        continue;
      }
      fIter = t.f.compose(fIter);
    }
    Poly<F> A = fIter - t.c;

    if (A.is_zero()) {
      // f^om == c identically: cell reduces to solvability of g^on = c
      Poly<F> gIter = Poly<F>::var();
      bool g_capped = false;
      F g0 = F();  // g^on(0)
      for (long n = 0; n < N; ++n) {
        if (n > 0) {
          if (!g_capped && Int(dg) * gIter.degree() > t.degree_cap) g_capped = true;
          if (!g_capped) gIter = t.g.compose(gIter);
          g0 = t.g.eval(g0);
        }
        if (!g_capped) {
          w.cells[m][n] = detail::poly_has_root(gIter - t.c, t.exclude_zero) ? 1 : 0;
          continue;
        }
        // degree cap passed: g^on - c is nonconstant (deg = dg^n > deg c);
        // with exclude_zero, a nonzero constant term certifies a nonzero root
        if (!t.exclude_zero) {
          w.cells[m][n] = 1;
          continue;
        }
        F c0 = t.c.eval(F());
        if (!(g0 == c0)) {
          w.cells[m][n] = 1;
        } else {
          w.cell_errors.emplace_back(m, n, "degree cap: monomial check unresolved");
        }
      }
      continue;
    }

    if (A.degree() < 1) continue;  // constant nonzero: no lambda at all

    Poly<F> cModA = Poly<F>::divmod(t.c, A).second;
    Poly<F> x = Poly<F>::divmod(Poly<F>::var(), A).second;  // g^on mod A
    for (long n = 0; n < N; ++n) {
      if (n > 0) x = t.g.compose_mod(x, A);
      Poly<F> B = x - cModA;
      w.cells[m][n] = common_root_exists(A, B, t.exclude_zero) ? 1 : 0;
    }
  }
  return w;
}

// Window of the degree-one solvability conditions for f = A1 z + B1,
// g = A2 z + B2, c = C z + D. C may be zero (constant c).
template <class F>
struct AffineParams {
  F A1, B1, A2, B2, C, D;
};

template <class F>
Window affine_window(const AffineParams<F>& p, long M, long N) {
  if (is_zero(p.A1) || is_zero(p.A2))
    throw std::domain_error("affine_window: A1, A2 must be nonzero");
  const F one = field_one<F>();
  std::vector<F> a1pow(M), a2pow(N), beta(M), delta(N);
  F x = one, b = F();
  for (long m = 0; m < M; ++m) {
    a1pow[m] = x;
    beta[m] = b;
    b = b + x * p.B1;
    x = x * p.A1;
  }
  x = one;
  b = F();
  for (long n = 0; n < N; ++n) {
    a2pow[n] = x;
    delta[n] = b;
    b = b + x * p.B2;
    x = x * p.A2;
  }
  return Window::from_predicate(
      [&](long m, long n) {
        if (a1pow[m] == p.C && !(beta[m] == p.D)) return false;
        if (a2pow[n] == p.C && !(delta[n] == p.D)) return false;
        return (a1pow[m] - p.C) * (delta[n] - p.D) == (a2pow[n] - p.C) * (beta[m] - p.D);
      },
      M, N, "oracle:affine");
}

// --- torsion oracle ---

struct TorsionSpec {
  Int d1, d2;      // |d| >= 2, negative allowed
  long k = 1;      // xi = primitive k-th root of unity
  long a = 0;      // c = xi^a * z^d3
  long e = 0;      // zeta = xi^e twist on g
  Int d3 = 0, d4 = 0;
};

namespace detail {

// is there j with j*A == c1 and j*B == c2 (mod M)?
inline bool two_congruences_solvable(const Int& A, const Int& c1, const Int& B,
                                     const Int& c2, const Int& M) {
  Int g1 = gcd(A, M);
  if (!divides(g1, mod_floor(c1, M))) return false;
  Int M1 = M / g1;
  Int Ar = mod_floor(A / g1, M1), inv;
  if (mpz_invert(inv.get_mpz_t(), Ar.get_mpz_t(), M1.get_mpz_t()) == 0)
    throw std::logic_error("two_congruences_solvable: inverse must exist");
  Int j0 = mod_floor((c1 / g1) * inv, M1);
  Int lhs = mod_floor(M1 * B, M);
  Int rhs = mod_floor(c2 - j0 * B, M);
  Int g2 = gcd(lhs, M);
  return divides(g2, rhs);
}

// exists lambda in C^x with lambda^A = xi^alpha and lambda^B = xi^beta,
// xi a primitive k-th root of unity
inline bool torsion_system_solvable(Int A, long alpha, Int B, long beta, long k) {
  alpha = mod_floor(alpha, k);
  beta = mod_floor(beta, k);
  if (sgn(A) < 0) {
    A = -A;
    alpha = mod_floor(-alpha, k);
  }
  if (sgn(B) < 0) {
    B = -B;
    beta = mod_floor(-beta, k);
  }
  if (is_zero(A) && is_zero(B)) return alpha == 0 && beta == 0;
  if (is_zero(A)) return alpha == 0;
  if (is_zero(B)) return beta == 0;
  Int M = Int(k) * lcm(A, B);
  Int c1 = alpha * (M / k), c2 = beta * (M / k);
  return two_congruences_solvable(A, c1, B, c2, M);
}

}  // namespace detail

// public entry to the congruence-solver route (independent of lemma41)
inline bool oracle_torsion_exists(const Int& A, long a, const Int& B, long b, long k) {
  return detail::torsion_system_solvable(A, a, B, b, k);
}

inline Window torsion_window(const TorsionSpec& s, long M, long N) {
  if (abs(s.d1) < 2 || abs(s.d2) < 2)
    throw std::domain_error("torsion_window: |d1|, |d2| must be >= 2");
  if (s.k < 1) throw std::domain_error("torsion_window: k >= 1");
  // prefix sums 1 + d2 + ... + d2^(n-1) mod k
  std::vector<long> sn(N, 0);
  {
    Int acc = 0, p = 1;
    for (long n = 0; n < N; ++n) {
      sn[n] = to_long(mod_floor(acc, Int(s.k)));
      acc += p;
      p *= s.d2;
    }
  }
  return Window::from_predicate(
      [&](long m, long n) {
        Int A = pow(s.d1, static_cast<unsigned long>(m)) - s.d3;
        Int B = pow(s.d2, static_cast<unsigned long>(n)) - s.d4;
        long beta = mod_floor(s.a - s.e * sn[n], s.k);
        return detail::torsion_system_solvable(A, s.a, B, beta, s.k);
      },
      M, N, "oracle:torsion");
}

}  // namespace slrec
