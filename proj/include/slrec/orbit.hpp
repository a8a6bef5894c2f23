#pragma once

// Orbit progressions: the sets S_{h,target}(lambda) = {m : h^om(lambda) =
// target}, which are empty, a singleton, or an arithmetic progression.
// Degree-1 maps are solved in closed form; degree >= 2 maps iterate with
// exact cycle detection, plus a rigorous escape bound over Q.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slrec/epset.hpp"
#include "slrec/poly.hpp"
#include "slrec/pset.hpp"

namespace slrec {

enum class OrbitClass { empty, finite_singleton, infinite_progression };

inline std::optional<long> as_nonneg_integer(const Rat& q) {
  if (den(q) != 1 || sgn(num(q)) < 0) return std::nullopt;
  if (!num(q).fits_slong_p()) return std::nullopt;
  return num(q).get_si();
}
inline std::optional<long> as_nonneg_integer(const CycRat& q) {
  if (!q.is_rational()) return std::nullopt;
  return as_nonneg_integer(q.rational_value());
}

struct OrbitResult {
  EPSet1 progression;
  OrbitClass classification = OrbitClass::empty;
  std::string note;
};

// Exact forward orbit of lambda under h up to closure.
// values[0..preperiod) is the tail, values[preperiod..preperiod+cycle_len)
// the cycle. Throws if the orbit does not close within the budget and no
// escape proof applies.
template <class F>
struct OrbitClosure {
  std::vector<F> values;
  long preperiod = 0;
  long cycle_len = 0;
};

namespace detail {

template <class F>
struct ValueLess {
  bool operator()(const F& a, const F& b) const { return a < b; }
};
template <>
struct ValueLess<CycRat> {
  bool operator()(const CycRat& a, const CycRat& b) const { return lex_less(a, b); }
};

// escape threshold over Q: once |x| clears it, |h(x)| > |x| and stays
// above |target|, so the orbit is strictly increasing and never returns
inline std::optional<Rat> escape_threshold(const Poly<Rat>& h, const Rat& target) {
  if (h.degree() < 2) return std::nullopt;
  Rat s(1);
  for (long i = 0; i < h.degree(); ++i) s += abs(h.coeff(i));
  Rat B = s / abs(h.leading());
  Rat t = abs(target);
  Rat thr = B > t ? B : t;
  return thr > 1 ? thr : Rat(1);
}

inline std::optional<Rat> escape_threshold(const Poly<CycRat>&, const CycRat&) {
  return std::nullopt;  // no archimedean bound attempted over Q(zeta)
}

inline bool above(const Rat& x, const Rat& thr) { return abs(x) > thr; }
inline bool above(const CycRat&, const Rat&) { return false; }

// orbits of non-preperiodic rationals can explode in height while staying
// bounded; cap the representation size and report the orbit unresolved
constexpr size_t kOrbitBitCap = 1 << 13;

inline size_t value_bits(const Rat& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline size_t value_bits(const CycRat& x) {
  size_t b = 0;
  for (const Rat& c : x.coeffs()) b = std::max(b, value_bits(c));
  return b;
}

}  // namespace detail

template <class F>
OrbitResult orbit_from_closure(const OrbitClosure<F>& oc, const F& target) {
  OrbitResult r;
  long hit = -1;
  for (long i = 0; i < static_cast<long>(oc.values.size()); ++i)
    if (oc.values[i] == target) {
      hit = i;
      break;
    }
  if (hit < 0) {
    r.classification = OrbitClass::empty;
    return r;
  }
  if (hit < oc.preperiod) {
    r.classification = OrbitClass::finite_singleton;
    r.progression = EPSet1::singleton(hit);
  } else {
    r.classification = OrbitClass::infinite_progression;
    r.progression = EPSet1::progression(hit, oc.cycle_len);
  }
  return r;
}

template <class F>
OrbitClosure<F> orbit_closure(const Poly<F>& h, const F& lambda, long budget) {
  if (budget < 1) throw std::domain_error("orbit budget must be >= 1");
  OrbitClosure<F> oc;
  std::map<F, long, detail::ValueLess<F>> seen;
  F x = lambda;
  for (long i = 0; i <= budget; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      oc.preperiod = it->second;
      oc.cycle_len = i - it->second;
      oc.values.resize(i);
      return oc;
    }
    seen.emplace(x, i);
    oc.values.push_back(x);
    x = h.eval(x);
    if (detail::value_bits(x) > detail::kOrbitBitCap)
      throw std::runtime_error("budget exhausted, orbit not resolved");
  }
  throw std::runtime_error("budget exhausted, orbit not resolved");
}

template <class F>
OrbitResult orbit_progression(const Poly<F>& h, const F& lambda, const F& target,
                              long budget = 4096) {
  if (budget < 1) throw std::domain_error("orbit budget must be >= 1");
  // constant maps close immediately through the generic path
  if (h.degree() == 1) {
    const F a = h.coeff(1), b = h.coeff(0);
    const F one = field_one<F>();
    OrbitResult r;
    if (a == one) {
      // lambda + m*b
      if (is_zero(b)) {
        if (lambda == target) {
          r.classification = OrbitClass::infinite_progression;
          r.progression = EPSet1::progression(0, 1);
        }
        return r;
      }
      // translation orbit: the unique candidate is m = (target - lambda)/b
      F q = (target - lambda) * inv(b);
      if (auto m = as_nonneg_integer(q)) {
        r.classification = OrbitClass::finite_singleton;
        r.progression = EPSet1::singleton(*m);
      }
      return r;
    }
    // a != 1: h^om(lambda) = a^m (lambda - u) + u, u = b/(1-a)
    F u = b * inv(one - a);
    if (lambda == u) {
      if (target == u) {
        r.classification = OrbitClass::infinite_progression;
        r.progression = EPSet1::progression(0, 1);
      }
      return r;
    }
    F rho = (target - u) * inv(lambda - u);
    EPSet1 sols = power_solve(a, rho);
    if (sols.is_empty()) return r;
    if (sols.is_finite()) {
      r.classification = OrbitClass::finite_singleton;
      r.progression = sols;
    } else {
      r.classification = OrbitClass::infinite_progression;
      r.progression = sols;
    }
    return r;
  }

  // degree >= 2 (or constants): iterate with cycle detection and escape proof
  std::map<F, long, detail::ValueLess<F>> seen;
  std::optional<Rat> thr = detail::escape_threshold(h, target);
  F x = lambda;
  long hit = -1;
  for (long i = 0; i <= budget; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      long pre = it->second, len = i - it->second;
      OrbitResult r;
      if (hit < 0) return r;
      if (hit < pre) {
        r.classification = OrbitClass::finite_singleton;
        r.progression = EPSet1::singleton(hit);
      } else {
        r.classification = OrbitClass::infinite_progression;
        r.progression = EPSet1::progression(hit, len);
      }
      return r;
    }
    if (x == target && hit < 0) hit = i;
    if (thr && detail::above(x, *thr)) {
      // strictly growing from here on: no cycle, no further target hits
      OrbitResult r;
      if (hit >= 0) {
        r.classification = OrbitClass::finite_singleton;
        r.progression = EPSet1::singleton(hit);
      } else {
        r.classification = OrbitClass::empty;
        r.note = "empty (verified: orbit escapes)";
      }
      return r;
    }
    seen.emplace(x, i);
    x = h.eval(x);
    if (detail::value_bits(x) > detail::kOrbitBitCap)
      throw std::runtime_error("budget exhausted, orbit not resolved");
  }
  throw std::runtime_error("budget exhausted, orbit not resolved");
}

}  // namespace slrec
