#pragma once

// Exact cyclotomic field arithmetic: elements of Q(zeta_n) represented in
// the power basis modulo the n-th cyclotomic polynomial. Elements carry
// their conductor; mixed-conductor arithmetic lifts to the lcm.

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slrec/factor.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

inline long euler_phi(long n) {
  if (n < 1) throw std::domain_error("euler_phi: n >= 1 required");
  Factorization f = factorize(Int(n));
  Int r = 1;
  for (const auto& [p, e] : f.factors)
    r *= pow(p, static_cast<unsigned long>(e - 1)) * (p - 1);
  return to_long(r);
}

namespace detail {

// quotient of exact division of integer polynomials (dense, constant first)
inline std::vector<Int> zpoly_div_exact(const std::vector<Int>& a,
                                        const std::vector<Int>& b) {
  std::vector<Int> r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  long db = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    if (is_zero(r[i])) continue;
    if (!divides(b[db], r[i])) throw std::logic_error("zpoly_div_exact: not divisible");
    Int c = r[i] / b[db];
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (const Int& c : r)
    if (!is_zero(c)) throw std::logic_error("zpoly_div_exact: nonzero remainder");
  return q;
}

}  // namespace detail

// Phi_n as integer coefficient vector, constant term first. Memoized.
inline const std::vector<Int>& cyclotomic_polynomial_z(long n) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const std::vector<Int>&(long)> get = [&](long m) -> const std::vector<Int>& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    // z^m - 1 divided by all Phi_d, d | m, d < m
    std::vector<Int> acc(static_cast<size_t>(m) + 1, Int(0));
    acc[0] = -1;
    acc[static_cast<size_t>(m)] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) acc = detail::zpoly_div_exact(acc, get(d));
    return cache.emplace(m, std::move(acc)).first->second;
  };
  return get(n);
}

class CycRat {
 public:
  CycRat() : cond_(1), c_(1, Rat(0)) {}
  explicit CycRat(const Rat& q) : cond_(1), c_(1, q) {}
  explicit CycRat(const Int& z) : cond_(1), c_(1, Rat(z)) {}
  explicit CycRat(long z) : cond_(1), c_(1, Rat(z)) {}

  // zeta_n^k
  static CycRat zeta(long n, long k = 1) {
    if (n < 1) throw std::domain_error("zeta: conductor must be >= 1");
    CycRat r;
    r.cond_ = n;
    r.c_.assign(static_cast<size_t>(euler_phi(n)), Rat(0));
    std::vector<Rat> p(static_cast<size_t>(mod_floor(k, n)) + 1, Rat(0));
    p.back() = 1;
    r.c_ = reduce(p, n);
    return r;
  }

  long conductor() const { return cond_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& q : c_)
      if (!slrec::is_zero(q)) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!slrec::is_zero(c_[i])) return false;
    return true;
  }

  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational element");
    return c_[0];
  }

  CycRat lifted(long target) const {
    if (target == cond_) return *this;
    if (target % cond_ != 0) throw std::domain_error("lift: conductor must divide target");
    long step = target / cond_;
    std::vector<Rat> p;
    p.assign(static_cast<size_t>((c_.size() - 1) * step) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    CycRat r;
    r.cond_ = target;
    r.c_ = reduce(p, target);
    return r;
  }

  friend CycRat operator+(const CycRat& a, const CycRat& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend CycRat operator-(const CycRat& a, const CycRat& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  friend CycRat operator-(const CycRat& a) {
    CycRat r = a;
    for (Rat& q : r.c_) q = -q;
    return r;
  }
  friend CycRat operator*(const CycRat& a, const CycRat& b) {
    auto [x, y] = align(a, b);
    std::vector<Rat> p(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (slrec::is_zero(x.c_[i])) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) p[i + j] += x.c_[i] * y.c_[j];
    }
    CycRat r;
    r.cond_ = x.cond_;
    r.c_ = reduce(p, x.cond_);
    return r;
  }
  CycRat& operator+=(const CycRat& b) { return *this = *this + b; }
  CycRat& operator-=(const CycRat& b) { return *this = *this - b; }
  CycRat& operator*=(const CycRat& b) { return *this = *this * b; }

  friend bool operator==(const CycRat& a, const CycRat& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

  // the automorphism zeta -> zeta^{-1}
  CycRat conj() const { return subst(cond_ - 1 >= 1 ? cond_ - 1 : 1); }

  // Galois-style substitution zeta -> zeta^k (k need not be coprime to n;
  // used for conductor bookkeeping and conj)
  CycRat subst(long k) const {
    std::vector<Rat> acc(1, Rat(0));
    // evaluate sum c_i * (z^k)^i mod Phi
    std::vector<Rat> zk(static_cast<size_t>(mod_floor(k, cond_)) + 1, Rat(0));
    zk.back() = 1;
    zk = reduce(zk, cond_);
    std::vector<Rat> pw(1, Rat(1));  // (z^k)^0
    size_t phi = c_.size();
    acc.assign(phi, Rat(0));
    for (size_t i = 0; i < phi; ++i) {
      for (size_t j = 0; j < pw.size(); ++j) acc[j] += c_[i] * pw[j];
      if (i + 1 < phi) {
        std::vector<Rat> nx(pw.size() + zk.size() - 1, Rat(0));
        for (size_t u = 0; u < pw.size(); ++u)
          for (size_t v = 0; v < zk.size(); ++v) nx[u + v] += pw[u] * zk[v];
        pw = reduce(nx, cond_);
      }
    }
    CycRat r;
    r.cond_ = cond_;
    r.c_ = acc;
    return r;
  }

  CycRat inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // extended Euclid of (this, Phi_n) over Q[z]
    const std::vector<Int>& phiz = cyclotomic_polynomial_z(cond_);
    std::vector<Rat> r0(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rat(phiz[i]);
    std::vector<Rat> r1 = c_;
    strip(r1);
    std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));
    while (true) {
      strip(r1);
      if (r1.empty()) throw std::logic_error("inv: gcd with Phi_n not constant");
      if (r1.size() == 1) {
        Rat lead = r1[0];
        std::vector<Rat> out(s1.size());
        for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / lead;
        CycRat res;
        res.cond_ = cond_;
        res.c_ = reduce(out, cond_);
        return res;
      }
      // r0 = q*r1 + r2
      std::vector<Rat> rem = r0, q(rem.size(), Rat(0));
      long d1 = static_cast<long>(r1.size()) - 1;
      for (long i = static_cast<long>(rem.size()) - 1; i >= d1; --i) {
        if (slrec::is_zero(rem[i])) continue;
        Rat cq = rem[i] / r1[d1];
        q[i - d1] = cq;
        for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= cq * r1[j];
      }
      strip(rem);
      // s2 = s0 - q*s1
      std::vector<Rat> qs(q.size() + s1.size() - 1, Rat(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (slrec::is_zero(q[i])) continue;
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
      }
      std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
      for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      r0 = r1;
      r1 = rem;
      s0 = s1;
      s1 = s2;
    }
  }

  friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inv(); }

  CycRat pow(const Int& e) const {
    if (sgn(e) < 0) return inv().pow(-e);
    CycRat base = *this, r(Rat(1));
    r = r.lifted(cond_);
    Int k = e;
    while (sgn(k) > 0) {
      if (mpz_odd_p(k.get_mpz_t())) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }
  CycRat pow(long e) const { return pow(Int(e)); }

  bool is_one() const {
    if (!slrec::is_zero(c_[0] - 1)) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (!slrec::is_zero(c_[i])) return false;
    return true;
  }

  // smallest m >= 1 with x^m = 1, if x is a root of unity. Torsion in
  // Q(zeta_n) has order dividing lcm(2, n), so testing up to 2n suffices.
  std::optional<long> root_of_unity_order() const {
    if (is_zero()) throw std::domain_error("root_of_unity_order(0)");
    CycRat p = *this;
    for (long m = 1; m <= 2 * cond_; ++m) {
      if (p.is_one()) return m;
      p = p * (*this);
    }
    return std::nullopt;
  }

  std::string str() const {
    std::string s = "[cond " + std::to_string(cond_) + ":";
    for (const Rat& q : c_) s += " " + q.get_str();
    return s + "]";
  }

  // lexicographic order after lifting to a common conductor (map key use)
  friend bool lex_less(const CycRat& a, const CycRat& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) {
      int c = cmp(x.c_[i], y.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  long cond_;
  std::vector<Rat> c_;

  static void strip(std::vector<Rat>& p) {
    while (!p.empty() && slrec::is_zero(p.back())) p.pop_back();
  }

  // reduce a Q[z] vector mod Phi_n, returning exactly phi(n) coefficients
  static std::vector<Rat> reduce(std::vector<Rat> p, long n) {
    const std::vector<Int>& phiz = cyclotomic_polynomial_z(n);
    size_t dphi = phiz.size() - 1;
    for (long i = static_cast<long>(p.size()) - 1; i >= static_cast<long>(dphi); --i) {
      if (slrec::is_zero(p[i])) continue;
      Rat c = p[i];  // Phi monic
      for (size_t j = 0; j < phiz.size(); ++j)
        p[i - dphi + j] -= c * Rat(phiz[j]);
    }
    p.resize(dphi, Rat(0));
    for (Rat& q : p) q.canonicalize();
    return p;
  }

  static std::pair<CycRat, CycRat> align(const CycRat& a, const CycRat& b) {
    if (a.cond_ == b.cond_) return {a, b};
    long n = lcm(a.cond_, b.cond_);
    return {a.lifted(n), b.lifted(n)};
  }
};

struct CycRatLess {
  bool operator()(const CycRat& a, const CycRat& b) const { return lex_less(a, b); }
};

inline bool is_zero(const CycRat& x) { return x.is_zero(); }
inline CycRat inv(const CycRat& x) { return x.inv(); }
inline Rat inv(const Rat& x) {
  if (is_zero(x)) throw std::domain_error("division by zero");
  return 1 / x;
}

}  // namespace slrec
